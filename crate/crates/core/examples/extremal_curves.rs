// The extremal curve between two principal vectors and its ellipse.
//
// `cargo run --example extremal_curves`

use momentkit::moment::CurveFrame;
use momentkit::random::{self, rng_from_seed};

pub fn run_example() -> momentkit::Result<()> {
    let s = random::subspace(4, 2, &mut rng_from_seed(5));
    for j in 0..4 {
        let v = s.principal_vector(j)?;
        println!("v^{j}: top coordinate {:.6}", v.top);
    }
    let frame = CurveFrame::new(&s, 0, 1)?;
    let e = frame.ellipse();
    println!("t0 = {:.6}, ellipse a = {:?}, b = {:?}", frame.t0, e.a, e.b);
    for i in 0..=8 {
        let t = std::f64::consts::FRAC_PI_2 * i as f64 / 8.0;
        let p = frame.point(t)?;
        let dir = frame.supporting_direction(t)?;
        println!(
            "t = {t:.4}  |v_0|² = {:.6}  |v_1|² = {:.6}  normal = ({:.4}, {:.4})",
            p.moment.coords()[0],
            p.moment.coords()[1],
            dir[0],
            dir[1]
        );
        assert!(frame.overlap_residual(&s, t.min(frame.t0))? < 1e-10);
    }
    Ok(())
}

fn main() -> momentkit::Result<()> {
    run_example()
}
