macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(projector_pair, "projector_pair.rs");
example!(moment_sampling, "moment_sampling.rs");
example!(extremal_curves, "extremal_curves.rs");
example!(joint_numerical_range, "joint_numerical_range.rs");
example!(minimal_matrix, "minimal_matrix.rs");
example!(hausdorff_bound, "hausdorff_bound.rs");
example!(centroid_algebra, "centroid_algebra.rs");

#[test]
fn examples_run() {
    projector_pair::run_example().unwrap();
    moment_sampling::run_example().unwrap();
    extremal_curves::run_example().unwrap();
    joint_numerical_range::run_example().unwrap();
    minimal_matrix::run_example().unwrap();
    hausdorff_bound::run_example().unwrap();
    centroid_algebra::run_example().unwrap();
}
