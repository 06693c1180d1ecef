macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(sample_graph, "sample_graph.rs");
example!(estimate_distances, "estimate_distances.rs");
example!(covering_numbers, "covering_numbers.rs");
example!(dimension, "dimension.rs");
example!(figure1, "figure1.rs");
example!(packing_test, "packing_test.rs");
example!(sparse_regime, "sparse_regime.rs");
example!(geometric_oracle, "geometric_oracle.rs");
example!(sbm_approximation, "sbm_approximation.rs");
example!(lower_bound_sbm, "lower_bound_sbm.rs");
example!(correlation_integral, "correlation_integral.rs");
example!(experiment_plan, "experiment_plan.rs");

#[test]
fn examples_run() {
    sample_graph::run().unwrap();
    estimate_distances::run().unwrap();
    covering_numbers::run().unwrap();
    dimension::run().unwrap();
    assert!(figure1::run().unwrap().lines().count() == 1 + 2 * 101);
    packing_test::run().unwrap();
    sparse_regime::run().unwrap();
    geometric_oracle::run().unwrap();
    sbm_approximation::run().unwrap();
    lower_bound_sbm::run().unwrap();
    correlation_integral::run().unwrap();
    experiment_plan::run().unwrap();
}
