//! Combine two monomials with the star product and compress the result,
//! realizing the tensor product of their crystal components.

use monocrystal::{
    explore_component, insert, is_isomorphic, parse_monomial, star, ExpoMatrix, Family, RankSpec,
    Result, Tensor,
};

fn main() -> Result<()> {
    let spec = RankSpec::new(Family::A, 2);
    let m1 = parse_monomial(spec, "Y1(0)")?;
    let m2 = parse_monomial(spec, "Y1(1)^-1*Y2(0)")?;

    let e1 = ExpoMatrix::encode(&m1)?;
    let e2 = ExpoMatrix::encode(&m2)?;
    let product = star(&e1, &e2)?;
    println!("star product of {m1} and {m2}:\n{}", product.to_text());

    let result = insert(&m1, &m2)?;
    println!("insertion result: {result}");
    let sum = m1.weight().checked_add(&m2.weight())?;
    assert_eq!(result.weight(), sum);
    println!("weights add up: {} = {}", result.weight(), sum);

    let staircase = ExpoMatrix::encode(&result)?;
    let (lambda, s) = staircase
        .staircase_params()
        .expect("insertion lands in a staircase class");
    println!("the result lives in the component with lambda = {lambda}, s = {s}");

    let tensor = Tensor::new(m1, m2)?;
    let tensor_graph = explore_component(&tensor, 10_000)?;
    let insert_graph = explore_component(&result, 10_000)?;
    println!(
        "tensor component: {} nodes, insertion component: {} nodes",
        tensor_graph.node_count(),
        insert_graph.node_count()
    );
    assert!(is_isomorphic(&tensor_graph, &insert_graph)?);
    println!("the insertion realizes the tensor component");
    Ok(())
}
