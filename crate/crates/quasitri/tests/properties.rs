mod common;

#[test]
fn stellar_then_vertex_removal_restores() {
    common::stellar_then_vertex_removal_restores().unwrap();
}

#[test]
fn bistellar_move_is_reversible() {
    common::bistellar_move_is_reversible().unwrap();
}

#[test]
fn snf_identity() {
    common::snf_identity().unwrap();
}

#[test]
fn connected_sum_vertex_count() {
    common::connected_sum_vertex_count().unwrap();
}

#[test]
fn abelianized_edge_path_group_is_h1() {
    common::abelianized_edge_path_group_is_h1().unwrap();
}
