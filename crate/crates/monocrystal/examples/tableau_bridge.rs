//! Convert staircase matrices to reversed tableaux, read off their words,
//! and check the signature rule against the matrix crystal operators.

use monocrystal::{parse_monomial, Crystal, ExpoMatrix, Family, RankSpec, Result, Tableau};

fn main() -> Result<()> {
    let spec = RankSpec::new(Family::A, 4);
    let m = parse_monomial(spec, "Y1(4)^-1*Y3(1)*Y1(3)^-1*Y4(1)^-1*Y2(0)^2*Y3(2)^2")?;
    let staircase = ExpoMatrix::encode(&m)?.compress()?;

    let tableau = Tableau::from_matrix(&staircase)?;
    println!("reversed tableau:\n{}", tableau.to_text());
    println!("weight: {}", tableau.weight()?);

    let word: Vec<String> = tableau
        .reading_word()
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("reading word: {}", word.join(" "));

    for i in 1..=spec.rank {
        let by_signature = tableau.f_signature(i)?;
        let by_matrix = staircase.f(i)?;
        match (by_signature, by_matrix) {
            (Some(t), Some(mat)) => {
                assert_eq!(t.to_matrix()?, mat);
                println!("f_{i} moves a box: rows become {:?}", row_strings(&t));
            }
            (None, None) => println!("f_{i} is undefined here"),
            _ => unreachable!("signature rule disagrees with the matrix model"),
        }
    }

    let cspec = RankSpec::new(Family::C, 3);
    let c = parse_monomial(cspec, "Y2(2)^2*Y2(1)^-1*Y3(0)*Y1(0)*Y3(3)^-1")?;
    let ct = Tableau::from_matrix(&ExpoMatrix::encode(&c)?.compress()?)?;
    println!("\ntype C tableau (unnormalized = {}):", ct.is_unnormalized());
    println!("{}", ct.to_text());

    let path = ct.to_path()?;
    println!("path segments: {}", path.len());
    println!("path endpoint weight: {}", path.endpoint_weight()?);
    assert_eq!(path.endpoint_weight()?, ct.weight()?);
    Ok(())
}

fn row_strings(t: &Tableau) -> Vec<String> {
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect()
}
