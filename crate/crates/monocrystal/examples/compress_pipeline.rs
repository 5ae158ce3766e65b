//! Walk a type A monomial through the full compression pipeline: raw matrix
//! encoding, reduction, lower decomposition, and compression into the
//! staircase class that names its crystal component.

use monocrystal::{parse_monomial, ExpoMatrix, Family, RankSpec, Result};

fn main() -> Result<()> {
    let spec = RankSpec::new(Family::A, 4);
    let m = parse_monomial(spec, "Y1(4)^-1*Y3(1)*Y1(3)^-1*Y4(1)^-1*Y2(0)^2*Y3(2)^2")?;
    println!("input monomial: {m}");
    println!("weight: {}", m.weight());

    let raw = ExpoMatrix::encode_raw(&m)?;
    println!("\nraw encoding:\n{}", raw.to_text());

    let reduced = ExpoMatrix::encode(&m)?;
    println!("reduced encoding:\n{}", reduced.to_text());

    let (m1, m2) = reduced.lower_decomposition()?;
    println!("lower part:\n{}", m1.to_text());
    println!("remainder:\n{}", m2.to_text());

    let mut step = reduced.clone();
    let mut rounds = 0;
    while step.staircase_params().is_none() {
        step = step.compress_step()?;
        rounds += 1;
        println!("after step {rounds}:\n{}", step.to_text());
    }

    let n = step.decode()?;
    let (lambda, s) = step.staircase_params().expect("loop ended on a staircase");
    println!("compressed monomial N = {n}");
    println!("component parameters: lambda = {lambda}, s = {s}");
    assert_eq!(n.weight(), m.weight());
    Ok(())
}
