//! The compression pipeline in type C, where the matrix carries barred rows
//! and the reduction rules pair entries across the bar.

use monocrystal::{parse_monomial, ExpoMatrix, Family, RankSpec, Result};

fn main() -> Result<()> {
    let spec = RankSpec::new(Family::C, 3);
    let m = parse_monomial(
        spec,
        "Y1(0)*Y1(2)*Y1(1)^-1*Y1(5)^-1*Y1(3)^-1*Y1(4)^-2*Y2(0)*Y2(3)*Y2(5)^-2*Y3(0)*Y3(4)",
    )?;
    println!("input monomial: {m}");
    println!("weight: {}", m.weight());

    let raw = ExpoMatrix::encode_raw(&m)?;
    println!("\nraw encoding (rows 1..3 unbarred, then 3~..1~ barred):");
    println!("{}", raw.to_text());

    let reduced = ExpoMatrix::encode(&m)?;
    println!("reduced encoding:\n{}", reduced.to_text());
    assert_eq!(reduced.weight(), m.weight());

    let compressed = reduced.compress()?;
    println!("compressed staircase:\n{}", compressed.to_text());

    let n = compressed.decode()?;
    let (lambda, s) = compressed
        .staircase_params()
        .expect("compression ends on a staircase");
    println!("compressed monomial N = {n}");
    println!("component parameters: lambda = {lambda}, s = {s}");
    assert_eq!(n.weight(), m.weight());
    Ok(())
}
