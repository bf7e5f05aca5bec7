// The five robust losses and their influence functions, tabulated.
//
//     cargo run --example loss_functions

use msmooth::{LossKind, LossSpec};

/// `(kind, ψ(σ/2), ψ(10σ))` for each loss at σ = 0.1.
pub fn run_example() -> msmooth::Result<Vec<(LossKind, f64, f64)>> {
    let sigma = 0.1;
    let xs = [0.0, 0.025, 0.05, 0.1, 0.2, 0.5];
    print!("{:11}", "x");
    for x in xs {
        print!("{x:>9.3}");
    }
    println!();
    let mut rows = Vec::new();
    for kind in LossKind::ALL {
        let spec = LossSpec::new(kind, sigma)?;
        print!("{:11}", format!("rho {kind}"));
        for x in xs {
            print!("{:>9.4}", spec.loss(x));
        }
        println!();
        print!("{:11}", "psi");
        for x in xs {
            print!("{:>9.4}", spec.influence(x));
        }
        println!("{}", if kind.is_redescending() { "   (redescending)" } else { "" });
        rows.push((kind, spec.influence(0.5 * sigma), spec.influence(10.0 * sigma)));
    }
    Ok(rows)
}

#[allow(dead_code)]
fn main() -> msmooth::Result<()> {
    run_example().map(|_| ())
}
