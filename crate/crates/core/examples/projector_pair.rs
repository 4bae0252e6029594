// Two different planes in C³ whose moment sets coincide.
//
// `cargo run --example projector_pair`

use momentkit::jnr::fibonacci_directions;
use momentkit::linalg::{c, real, CVector};
use momentkit::minimality::hausdorff_moments;
use momentkit::Subspace;

pub fn run_example() -> momentkit::Result<()> {
    let e = |t: f64| c(t.cos(), t.sin());
    let v = Subspace::from_spanning(&[
        CVector::from_vec(vec![real(1.0), real(1.0), real(0.0)]),
        CVector::from_vec(vec![real(0.0), real(1.0), real(1.0)]),
    ])?;
    let pi = std::f64::consts::PI;
    let w = Subspace::from_spanning(&[
        CVector::from_vec(vec![real(-1.0), e(pi / 4.0), real(0.0)]),
        CVector::from_vec(vec![real(0.0), e(pi / 3.0), e(pi / 6.0)]),
    ])?;
    println!("P_V =\n{}", v.projector().as_matrix());
    println!("P_W =\n{}", w.projector().as_matrix());
    let h = hausdorff_moments(&v, &w, &fibonacci_directions(3, 500))?;
    println!("max support gap over 500 directions: {:.2e}", h.estimate);
    println!("||P_V - P_W|| = {:.6}", h.projector_distance);
    assert!(h.estimate < 1e-12 && h.projector_distance > 0.1);
    Ok(())
}

fn main() -> momentkit::Result<()> {
    run_example()
}
