use crate::cartan::{Family, RankSpec, Weight};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Default node cap for component exploration.
pub const DEFAULT_NODE_CAP: usize = 100_000;

/// A seminormal crystal element: weights, string statistics, and the
/// partial lowering and raising operators.
pub trait Crystal: Sized + Clone {
    fn spec(&self) -> RankSpec;
    fn weight(&self) -> Weight;
    fn phi(&self, i: usize) -> Result<i64>;
    fn eps(&self, i: usize) -> Result<i64>;
    fn f(&self, i: usize) -> Result<Option<Self>>;
    fn e(&self, i: usize) -> Result<Option<Self>>;
    /// A stable identifier; two elements are equal iff their keys agree.
    fn key(&self) -> String;
}

impl Crystal for Monomial {
    fn spec(&self) -> RankSpec {
        Monomial::spec(self)
    }

    fn weight(&self) -> Weight {
        Monomial::weight(self)
    }

    fn phi(&self, i: usize) -> Result<i64> {
        Monomial::phi(self, i)
    }

    fn eps(&self, i: usize) -> Result<i64> {
        Monomial::eps(self, i)
    }

    fn f(&self, i: usize) -> Result<Option<Self>> {
        Monomial::f(self, i)
    }

    fn e(&self, i: usize) -> Result<Option<Self>> {
        Monomial::e(self, i)
    }

    fn key(&self) -> String {
        self.to_string()
    }
}

/// The tensor product b1 (x) b2 of two crystal elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor<L: Crystal, R: Crystal> {
    pub left: L,
    pub right: R,
}

impl<L: Crystal, R: Crystal> Tensor<L, R> {
    pub fn new(left: L, right: R) -> Result<Self> {
        if left.spec() != right.spec() {
            return Err(Error::SpecMismatch {
                left: left.spec().to_string(),
                right: right.spec().to_string(),
            });
        }
        Ok(Tensor { left, right })
    }
}

impl<L: Crystal, R: Crystal> Crystal for Tensor<L, R> {
    fn spec(&self) -> RankSpec {
        self.left.spec()
    }

    fn weight(&self) -> Weight {
        self.left
            .weight()
            .checked_add(&self.right.weight())
            .expect("tensor factors share a rank")
    }

    fn phi(&self, i: usize) -> Result<i64> {
        let lhs = self.left.phi(i)? + self.right.weight().pairing(i)?;
        Ok(lhs.max(self.right.phi(i)?))
    }

    fn eps(&self, i: usize) -> Result<i64> {
        let rhs = self.right.eps(i)? - self.left.weight().pairing(i)?;
        Ok(self.left.eps(i)?.max(rhs))
    }

    fn f(&self, i: usize) -> Result<Option<Self>> {
        if self.left.phi(i)? > self.right.eps(i)? {
            match self.left.f(i)? {
                Some(l) => Ok(Some(Tensor {
                    left: l,
                    right: self.right.clone(),
                })),
                None => Err(Error::Invariant(
                    "tensor rule chose the left factor but it cannot lower".into(),
                )),
            }
        } else if self.phi(i)? == 0 {
            Ok(None)
        } else {
            match self.right.f(i)? {
                Some(r) => Ok(Some(Tensor {
                    left: self.left.clone(),
                    right: r,
                })),
                None => Err(Error::Invariant(
                    "tensor rule chose the right factor but it cannot lower".into(),
                )),
            }
        }
    }

    fn e(&self, i: usize) -> Result<Option<Self>> {
        if self.left.phi(i)? < self.right.eps(i)? {
            match self.right.e(i)? {
                Some(r) => Ok(Some(Tensor {
                    left: self.left.clone(),
                    right: r,
                })),
                None => Err(Error::Invariant(
                    "tensor rule chose the right factor but it cannot raise".into(),
                )),
            }
        } else if self.eps(i)? == 0 {
            Ok(None)
        } else {
            match self.left.e(i)? {
                Some(l) => Ok(Some(Tensor {
                    left: l,
                    right: self.right.clone(),
                })),
                None => Err(Error::Invariant(
                    "tensor rule chose the left factor but it cannot raise".into(),
                )),
            }
        }
    }

    fn key(&self) -> String {
        format!("({})(x)({})", self.left.key(), self.right.key())
    }
}

/// The connected component of a crystal element, stored as a labeled graph
/// whose edges are the lowering moves src --i--> dst.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    pub spec: RankSpec,
    pub root: String,
    pub nodes: BTreeMap<String, Weight>,
    pub edges: BTreeSet<(String, usize, String)>,
}

impl CrystalGraph {
    #[must_use]
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.spec.family.to_string(),
            "rank": self.spec.rank,
            "root": self.root,
            "nodes": self.nodes.iter().map(|(k, w)| {
                serde_json::json!({"key": k, "wt": w.lambda})
            }).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(s, i, d)| {
                serde_json::json!([s, i, d])
            }).collect::<Vec<_>>(),
        })
    }
}

/// Explores the full connected component of `seed` under all lowering and
/// raising operators, stopping with an error if more than `cap` nodes are
/// found.
pub fn explore_component<C: Crystal>(seed: &C, cap: usize) -> Result<CrystalGraph> {
    let spec = seed.spec();
    let rank = spec.rank;
    let mut nodes: BTreeMap<String, Weight> = BTreeMap::new();
    let mut edges: BTreeSet<(String, usize, String)> = BTreeSet::new();
    let mut queue: VecDeque<C> = VecDeque::new();

    let root = seed.key();
    nodes.insert(root.clone(), seed.weight());
    queue.push_back(seed.clone());

    while let Some(x) = queue.pop_front() {
        let xk = x.key();
        for i in 1..=rank {
            if let Some(y) = x.f(i)? {
                let yk = y.key();
                edges.insert((xk.clone(), i, yk.clone()));
                if !nodes.contains_key(&yk) {
                    if nodes.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    nodes.insert(yk, y.weight());
                    queue.push_back(y);
                }
            }
            if let Some(y) = x.e(i)? {
                let yk = y.key();
                edges.insert((yk.clone(), i, xk.clone()));
                if !nodes.contains_key(&yk) {
                    if nodes.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    nodes.insert(yk, y.weight());
                    queue.push_back(y);
                }
            }
        }
    }

    Ok(CrystalGraph {
        spec,
        root,
        nodes,
        edges,
    })
}

/// Serializes a crystal graph up to relabeling of its nodes: nodes are
/// renumbered by a breadth-first walk from the unique source following
/// lowering edges by label, then raising edges by label, and the result
/// lists each node's weight and lowering targets.
pub fn canonical_form(graph: &CrystalGraph) -> Result<String> {
    let rank = graph.spec.rank;
    let mut fwd: HashMap<(&str, usize), &str> = HashMap::new();
    let mut rev: HashMap<(&str, usize), &str> = HashMap::new();
    let mut has_incoming: BTreeSet<&str> = BTreeSet::new();
    for (src, i, dst) in &graph.edges {
        fwd.insert((src.as_str(), *i), dst.as_str());
        rev.insert((dst.as_str(), *i), src.as_str());
        has_incoming.insert(dst.as_str());
    }

    let sources: Vec<&str> = graph
        .nodes
        .keys()
        .map(String::as_str)
        .filter(|k| !has_incoming.contains(k))
        .collect();
    let root: &str = match sources.len() {
        1 => sources[0],
        0 => graph
            .nodes
            .keys()
            .next()
            .map(String::as_str)
            .ok_or_else(|| Error::Invariant("canonical form of an empty graph".into()))?,
        _ => {
            return Err(Error::MultipleSources(
                sources.iter().map(|s| s.to_string()).collect(),
            ))
        }
    };

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut order: Vec<&str> = Vec::new();
    let mut queue: VecDeque<&str> = VecDeque::new();
    index.insert(root, 0);
    order.push(root);
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        for i in 1..=rank {
            for next in [fwd.get(&(x, i)), rev.get(&(x, i))].into_iter().flatten() {
                if !index.contains_key(*next) {
                    index.insert(next, order.len());
                    order.push(next);
                    queue.push_back(next);
                }
            }
        }
    }

    if order.len() != graph.nodes.len() {
        return Err(Error::Invariant(format!(
            "graph is not connected: reached {} of {} nodes",
            order.len(),
            graph.nodes.len()
        )));
    }

    let mut out = String::new();
    out.push_str(&format!("n={};", order.len()));
    for &k in &order {
        out.push_str(&format!("w{};", graph.nodes[k]));
        for i in 1..=rank {
            match fwd.get(&(k, i)) {
                Some(dst) => out.push_str(&format!("f{i}={};", index[*dst])),
                None => out.push_str(&format!("f{i}=.;")),
            }
        }
    }
    Ok(out)
}

/// Whether two crystal graphs are isomorphic as edge-labeled, weighted
/// digraphs.
pub fn is_isomorphic(g1: &CrystalGraph, g2: &CrystalGraph) -> Result<bool> {
    if g1.spec != g2.spec || g1.node_count() != g2.node_count() {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

fn reduced_product(factors: &[(i128, i128)]) -> Result<i128> {
    fn gcd(a: i128, b: i128) -> i128 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    let mut num = 1i128;
    let mut den = 1i128;
    for &(a, b) in factors {
        num = num
            .checked_mul(a)
            .ok_or_else(|| Error::Invariant("dimension product overflow".into()))?;
        den = den
            .checked_mul(b)
            .ok_or_else(|| Error::Invariant("dimension product overflow".into()))?;
        let g = gcd(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
    }
    if den < 0 {
        num = -num;
        den = -den;
    }
    if den != 1 {
        return Err(Error::Invariant(format!(
            "dimension product is not integral: {num}/{den}"
        )));
    }
    Ok(num)
}

/// The dimension of the irreducible highest weight module with dominant
/// highest weight `w`, by the product formula over positive roots.
pub fn dim_highest_weight(spec: RankSpec, w: &Weight) -> Result<i128> {
    if w.rank() != spec.rank {
        return Err(Error::LengthMismatch {
            expected: spec.rank,
            got: w.rank(),
        });
    }
    if !w.is_dominant() {
        return Err(Error::NonDominant(w.to_string()));
    }
    let n = spec.rank;
    let tail_sums = |count: usize| -> Vec<i128> {
        let mut l = vec![0i128; count];
        let mut acc = 0i128;
        for k in (0..count).rev() {
            if k < n {
                acc += i128::from(w.lambda[k]);
            }
            l[k] = acc;
        }
        l
    };
    let mut factors: Vec<(i128, i128)> = Vec::new();
    match spec.family {
        Family::A => {
            let l = tail_sums(n + 1);
            let c: Vec<i128> = (0..=n).map(|i| l[i] + (n - i) as i128).collect();
            for i in 0..=n {
                for j in (i + 1)..=n {
                    factors.push((c[i] - c[j], (j - i) as i128));
                }
            }
        }
        Family::C => {
            let l = tail_sums(n);
            let x: Vec<i128> = (0..n).map(|i| l[i] + (n - i) as i128).collect();
            let r: Vec<i128> = (0..n).map(|i| (n - i) as i128).collect();
            for i in 0..n {
                for j in (i + 1)..n {
                    factors.push((x[i] * x[i] - x[j] * x[j], r[i] * r[i] - r[j] * r[j]));
                }
                factors.push((x[i], r[i]));
            }
        }
    }
    reduced_product(&factors)
}
