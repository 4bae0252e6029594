// Building and certifying minimal hermitian matrices.
//
// `cargo run --example minimal_matrix`

use momentkit::linalg::{c, real, CVector};
use momentkit::minimality::{check_minimal, construct_minimal, moments_intersect, DEFAULT_EIG_TOL};
use momentkit::{FwOptions, HermitianMatrix, MinimalMatrixParts, Subspace};
use nalgebra::DVector;

pub fn run_example() -> momentkit::Result<()> {
    let opts = FwOptions::default();
    let h = real(0.5f64.sqrt());
    let v = Subspace::from_spanning(&[CVector::from_vec(vec![h, c(0.0, 1.0) * h])])?;
    let w = Subspace::from_spanning(&[CVector::from_vec(vec![h, c(0.0, -1.0) * h])])?;
    let cert = moments_intersect(&v, &w, &opts)?;
    println!("moments of the conjugate lines: {}", cert.status.as_str());

    let parts = MinimalMatrixParts { lambda: 2.0, v, w, r: HermitianMatrix::zeros(2) };
    let (m, report) = construct_minimal(&parts, &opts)?;
    println!("M =\n{}", m.as_matrix());
    println!("verdict {} with norm {:.6}", report.verdict.as_str(), report.norm);

    let d = HermitianMatrix::from_real_diagonal(&DVector::from_vec(vec![1.0, -1.0]));
    let report = check_minimal(&d, DEFAULT_EIG_TOL, &opts)?;
    let sep = report.certificate.as_ref().and_then(|c| c.separation.as_ref()).expect("separated");
    println!(
        "diag(1, -1): {} (direction {:?}, margin {:.6})",
        report.verdict.as_str(),
        sep.direction.as_slice(),
        sep.margin
    );
    Ok(())
}

fn main() -> momentkit::Result<()> {
    run_example()
}
