//! Classifies the self-injective Nakayama algebras N(n,l) over F_2 and Q.
//!
//! Run with `cargo run --example classify`.

use selfinj::algebra::gen_nakayama;
use selfinj::{Decision, Field};

fn show(d: Decision) -> &'static str {
    match d {
        Decision::Yes => "yes",
        Decision::No => "no",
        Decision::Unknown => "?",
    }
}

fn main() -> selfinj::Result<()> {
    for field in [Field::prime(2)?, Field::Rationals] {
        println!("over {field}");
        println!("  algebra  dim  self-inj  weakly-sym  symmetric  sigma      stable K0");
        for n in 1..=3 {
            for l in 2..=4 {
                let a = gen_nakayama(n, l).to_algebra(&field)?;
                let sigma = a.nakayama_permutation()?;
                let k0 = a.stable_k0()?;
                let divisors: Vec<String> = k0.divisors.iter().map(|d| d.to_string()).collect();
                println!(
                    "  N({n},{l})   {:>3}  {:<8}  {:<10}  {:<9}  {:<9}  ({}){}",
                    a.dim(),
                    a.is_self_injective()?,
                    a.is_weakly_symmetric()?,
                    show(a.is_symmetric()?),
                    sigma.to_string(),
                    divisors.join(", "),
                    if k0.free { "" } else { " torsion" },
                );
            }
        }
    }
    Ok(())
}
