//! Explore connected crystal components, compare them up to isomorphism,
//! and cross-check their sizes against the Weyl dimension formula.

use monocrystal::{
    canonical_form, dim_highest_weight, explore_component, is_isomorphic, parse_monomial,
    ExpoMatrix, Family, RankSpec, Result, Weight,
};

fn main() -> Result<()> {
    let spec = RankSpec::new(Family::A, 2);

    let hw = parse_monomial(spec, "Y1(0)*Y2(0)")?;
    let graph = explore_component(&hw, 10_000)?;
    println!(
        "component of {hw}: {} nodes, {} edges",
        graph.node_count(),
        graph.edges.len()
    );

    let lambda = Weight { lambda: vec![1, 1] };
    let dim = dim_highest_weight(spec, &lambda)?;
    println!("Weyl dimension of the {lambda} module: {dim}");
    assert_eq!(graph.node_count() as i128, dim);

    let wandering = parse_monomial(spec, "Y1(2)^-1*Y1(1)^2")?;
    let original = explore_component(&wandering, 10_000)?;
    let compressed = ExpoMatrix::encode(&wandering)?.compress()?.decode()?;
    let image = explore_component(&compressed, 10_000)?;
    println!(
        "compression sends {wandering} to {compressed}; components have {} and {} nodes",
        original.node_count(),
        image.node_count()
    );
    assert!(is_isomorphic(&original, &image)?);
    println!("the two components are isomorphic");
    println!(
        "shared canonical form starts with {:?}",
        &canonical_form(&original)?[..40.min(canonical_form(&original)?.len())]
    );

    let cspec = RankSpec::new(Family::C, 2);
    let c = parse_monomial(cspec, "Y1(1)")?;
    let cgraph = explore_component(&c, 10_000)?;
    let cdim = dim_highest_weight(cspec, &Weight { lambda: vec![1, 0] })?;
    println!("type C component of {c}: {} nodes (Weyl says {cdim})", cgraph.node_count());
    Ok(())
}
