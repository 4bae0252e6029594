// Random points of a moment set, checked against its support function.
//
// `cargo run --example moment_sampling`

use momentkit::jnr::fibonacci_directions;
use momentkit::moment::{sample_moment, support_moment};
use momentkit::random::{self, rng_from_seed};

pub fn run_example() -> momentkit::Result<()> {
    let s = random::subspace(4, 2, &mut rng_from_seed(11));
    let points = sample_moment(&s, 2000, 11);
    let mut slack = f64::INFINITY;
    for c in fibonacci_directions(4, 64) {
        let h = support_moment(&s, &c)?;
        let best = points.iter().map(|p| c.dot(p.coords())).fold(f64::NEG_INFINITY, f64::max);
        assert!(best <= h.value + 1e-12);
        slack = slack.min(h.value - best);
    }
    println!("first point: {:?}", points[0].coords().as_slice());
    println!("closest approach of 2000 samples to a supporting hyperplane: {slack:.3e}");
    println!("centroid: {:?}", s.centroid().coords().as_slice());
    Ok(())
}

fn main() -> momentkit::Result<()> {
    run_example()
}
