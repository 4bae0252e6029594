// Centroids of direct sums, complements and differences.
//
// `cargo run --example centroid_algebra`

use momentkit::random::{self, rng_from_seed};
use momentkit::subspace::{centroid_algebra_check, CentroidIdentity};
use momentkit::Subspace;

pub fn run_example() -> momentkit::Result<()> {
    let u = random::unitary(5, &mut rng_from_seed(3));
    let cols = |a: usize, b: usize| Subspace::from_orthonormal(u.columns(a, b - a).into_owned());
    let (s, v) = (cols(0, 2)?, cols(2, 3)?);
    println!("c(S) = {:?}", s.centroid().coords().as_slice());
    println!("c(C^5) = {:?}", Subspace::whole(5).centroid().coords().as_slice());
    let checks = [
        ("direct sum", centroid_algebra_check(CentroidIdentity::DirectSum(&s, &v))?),
        ("complement", centroid_algebra_check(CentroidIdentity::Complement(&s))?),
        ("difference", centroid_algebra_check(CentroidIdentity::Difference { outer: &cols(0, 3)?, inner: &s })?),
    ];
    for (name, check) in checks {
        println!("{name}: residual {:.2e}", check.residual);
        assert!(check.residual < 1e-12);
    }
    Ok(())
}

fn main() -> momentkit::Result<()> {
    run_example()
}
