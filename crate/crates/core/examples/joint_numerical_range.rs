// Boundary of the joint numerical range of `P E_i P` and its unit-sum slice.
//
// `cargo run --example joint_numerical_range`

use momentkit::jnr::{cone_membership, delta_map, fibonacci_directions, jnr_boundary};
use momentkit::minimality::FwOptions;
use momentkit::random::{self, rng_from_seed};

pub fn run_example() -> momentkit::Result<()> {
    let mut rng = rng_from_seed(8);
    let s = random::subspace(3, 2, &mut rng);
    let boundary = jnr_boundary(&s, &fibonacci_directions(3, 200))?;
    let on_slice = boundary.iter().filter(|p| (p.sum() - 1.0).abs() < 1e-9).count();
    println!("{} boundary points, {on_slice} on the unit-sum slice", boundary.len());

    let rho = random::density(3, &mut rng);
    let x = delta_map(&s, &rho)?.x;
    let verdict = cone_membership(&s, &x, &FwOptions::default())?;
    println!("Δ(ρ) = {:?}", x.as_slice());
    println!("rescaled by {:.6}, distance to the moment set {:.2e}", verdict.scaling, verdict.distance);
    assert!(verdict.member);
    Ok(())
}

fn main() -> momentkit::Result<()> {
    run_example()
}
