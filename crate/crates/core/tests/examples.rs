mod exact_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_arithmetic.rs"));
}

#[test]
fn exact_arithmetic_example_runs() {
    exact_arithmetic::run_example().expect("exact_arithmetic example should run");
}

mod lattices {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattices.rs"));
}

#[test]
fn lattices_example_runs() {
    lattices::run_example().expect("lattices example should run");
}

mod weyl_groups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/weyl_groups.rs"));
}

#[test]
fn weyl_groups_example_runs() {
    weyl_groups::run_example().expect("weyl_groups example should run");
}

mod group_orders {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/group_orders.rs"));
}

#[test]
fn group_orders_example_runs() {
    group_orders::run_example().expect("group_orders example should run");
}

mod molien_series {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/molien_series.rs"));
}

#[test]
fn molien_series_example_runs() {
    molien_series::run_example().expect("molien_series example should run");
}

mod counting_polynomials {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/counting_polynomials.rs"));
}

#[test]
fn counting_polynomials_example_runs() {
    counting_polynomials::run_example().expect("counting_polynomials example should run");
}

mod nonsplit_conic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/nonsplit_conic.rs"));
}

#[test]
fn nonsplit_conic_example_runs() {
    nonsplit_conic::run_example().expect("nonsplit_conic example should run");
}

mod factorization {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/factorization.rs"));
}

#[test]
fn factorization_example_runs() {
    factorization::run_example().expect("factorization example should run");
}

mod glr_family {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/glr_family.rs"));
}

#[test]
fn glr_family_example_runs() {
    glr_family::run_example().expect("glr_family example should run");
}

mod reductions {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reductions.rs"));
}

#[test]
fn reductions_example_runs() {
    reductions::run_example().expect("reductions example should run");
}

mod finite_field_oracles {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/finite_field_oracles.rs"));
}

#[test]
fn finite_field_oracles_example_runs() {
    finite_field_oracles::run_example().expect("finite_field_oracles example should run");
}

mod custom_spec {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/custom_spec.rs"));
}

#[test]
fn custom_spec_example_runs() {
    custom_spec::run_example().expect("custom_spec example should run");
}

mod cli_in_process {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_in_process.rs"));
}

#[test]
fn cli_in_process_example_runs() {
    cli_in_process::run_example().expect("cli_in_process example should run");
}
