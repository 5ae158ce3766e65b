//! Apply lowering and raising operators to Nakajima monomials and watch the
//! string statistics respond.

use monocrystal::{parse_monomial, Family, RankSpec, Result};

fn main() -> Result<()> {
    let spec = RankSpec::new(Family::A, 2);
    let hw = parse_monomial(spec, "Y1(0)*Y2(0)")?;
    println!("start at {hw} with weight {}", hw.weight());

    let mut current = hw.clone();
    for i in [1, 2, 1, 2] {
        let phi = current.phi(i)?;
        let eps = current.eps(i)?;
        match current.f(i)? {
            Some(next) => {
                println!("f_{i}: {current} -> {next}  (phi_{i}={phi}, eps_{i}={eps})");
                current = next;
            }
            None => {
                println!("f_{i} is undefined on {current}");
                break;
            }
        }
    }

    println!("climbing back up:");
    for i in [2, 1, 2, 1] {
        match current.e(i)? {
            Some(next) => {
                println!("e_{i}: {current} -> {next}");
                current = next;
            }
            None => println!("e_{i} is undefined on {current}"),
        }
    }
    assert_eq!(current, hw);

    let cspec = RankSpec::new(Family::C, 2);
    let m = parse_monomial(cspec, "Y1(0)")?;
    let chain = [1, 2, 1];
    let mut c = m.clone();
    println!("a type C string from {m}:");
    for i in chain {
        c = c.f(i)?.expect("operator defined along this chain");
        println!("f_{i} -> {c}");
    }
    Ok(())
}
