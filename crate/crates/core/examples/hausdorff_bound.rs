// Moment sets move continuously with the subspace.
//
// `cargo run --example hausdorff_bound`

use momentkit::jnr::fibonacci_directions;
use momentkit::linalg::{c, real, CMatrix};
use momentkit::minimality::hausdorff_moments;
use momentkit::random::{self, rng_from_seed};
use momentkit::Subspace;

pub fn run_example() -> momentkit::Result<()> {
    let mut rng = rng_from_seed(21);
    let n = 4;
    let s = random::subspace(n, 2, &mut rng);
    for eps in [0.1, 0.03, 0.01] {
        // rotate e_0 towards e_1 by a small angle
        let mut u = CMatrix::identity(n, n);
        u[(0, 0)] = real(f64::cos(eps));
        u[(1, 1)] = real(f64::cos(eps));
        u[(0, 1)] = c(0.0, f64::sin(eps));
        u[(1, 0)] = c(0.0, f64::sin(eps));
        let v = Subspace::from_orthonormal(&u * s.basis())?;
        let h = hausdorff_moments(&s, &v, &fibonacci_directions(n, 500))?;
        println!(
            "eps = {eps}: estimate {:.3e}, bound {:.3e}, hypothesis {}",
            h.estimate, h.bound, h.hypothesis
        );
        if h.hypothesis {
            assert!(h.estimate <= h.bound + 1e-9);
        }
    }
    Ok(())
}

fn main() -> momentkit::Result<()> {
    run_example()
}
