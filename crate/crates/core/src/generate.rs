//! Fixture graphs and seeded random families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Edges of `K_{3,3}` with `a1 b1` subdivided by a vertex `w`:
/// `a1..a3 = 0..2`, `b1..b3 = 3..5`, `w = 6`.
pub const GADGET_EDGES: [(usize, usize); 10] = [
    (0, 4),
    (0, 5),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (0, 6),
    (6, 3),
];
pub const GADGET_VERTICES: usize = 7;
/// The degree-2 subdivision vertex of the gadget.
pub const GADGET_ATTACH: usize = 6;

/// Petersen vertex ids: `x1..x5 = 0..4`, `y1..y5 = 5..9`.
pub fn petersen_x(i: usize) -> usize {
    i - 1
}

pub fn petersen_y(i: usize) -> usize {
    i + 4
}

/// The five spokes `x1y1, x2y4, x3y2, x4y5, x5y3` (a perfect matching).
pub fn petersen_spokes() -> [(usize, usize); 5] {
    let (x, y) = (petersen_x, petersen_y);
    [(x(1), y(1)), (x(2), y(4)), (x(3), y(2)), (x(4), y(5)), (x(5), y(3))]
}

fn petersen_rims() -> [(usize, usize); 10] {
    let (x, y) = (petersen_x, petersen_y);
    [
        (x(1), x(2)),
        (x(2), x(3)),
        (x(3), x(4)),
        (x(4), x(5)),
        (x(5), x(1)),
        (y(1), y(2)),
        (y(2), y(3)),
        (y(3), y(4)),
        (y(4), y(5)),
        (y(5), y(1)),
    ]
}

pub fn cycle(n: usize, weight: f64) -> Result<WeightedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    WeightedGraph::uniform(n, (0..n).map(|i| (i, (i + 1) % n)), weight)
}

pub fn path(n: usize, weight: f64) -> Result<WeightedGraph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    WeightedGraph::uniform(n, (1..n).map(|i| (i - 1, i)), weight)
}

pub fn complete(n: usize, weight: f64) -> Result<WeightedGraph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    WeightedGraph::uniform(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))), weight)
}

pub fn petersen(weight: f64) -> WeightedGraph {
    petersen_c3(weight, weight)
}

/// Petersen graph with the spoke matching weighted `matching_weight` and
/// the two 5-cycles weighted `other_weight`.
pub fn petersen_c3(matching_weight: f64, other_weight: f64) -> WeightedGraph {
    let spokes = petersen_spokes().map(|(u, v)| (u, v, matching_weight));
    let rims = petersen_rims().map(|(u, v)| (u, v, other_weight));
    WeightedGraph::new(10, spokes.into_iter().chain(rims)).expect("petersen is simple")
}

/// `K_{l+1}` where edges at vertex 0 weigh `big_weight` and all others 1.
pub fn star_counterexample(big_weight: f64, l: usize) -> Result<WeightedGraph> {
    if l < 1 {
        return Err(Error::InvalidParameter("star counterexample needs l >= 1".into()));
    }
    let n = l + 1;
    WeightedGraph::new(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, if u == 0 { big_weight } else { 1.0 }))),
    )
}

/// Whether `(W, l)` satisfy `W > 1/(4ε)` and `l > W²/(4Wε − 1)`, which
/// makes the spanning star `T` violate `mac(G) ≥ w(G)/2 + ε·w(T)`.
pub fn star_counterexample_valid(big_weight: f64, l: usize, epsilon: f64) -> bool {
    if epsilon <= 0.0 || big_weight <= 1.0 / (4.0 * epsilon) {
        return false;
    }
    let denominator = 4.0 * big_weight * epsilon - 1.0;
    (l as f64) > big_weight * big_weight / denominator
}

/// The regularization gadget on its own, unit weights.
pub fn gadget_k33_subdivided() -> WeightedGraph {
    WeightedGraph::uniform(GADGET_VERTICES, GADGET_EDGES, 1.0).expect("gadget is simple")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightDistribution {
    Unit,
    /// Integers drawn uniformly from `lo..=hi`.
    Integer { lo: u32, hi: u32 },
    /// Reals drawn uniformly from `[lo, hi)`.
    Uniform { lo: f64, hi: f64 },
}

impl WeightDistribution {
    fn validate(&self) -> Result<()> {
        match *self {
            WeightDistribution::Unit => Ok(()),
            WeightDistribution::Integer { lo, hi } if lo <= hi => Ok(()),
            WeightDistribution::Uniform { lo, hi } if 0.0 <= lo && lo < hi && hi.is_finite() => Ok(()),
            other => Err(Error::InvalidParameter(format!("bad weight distribution {other:?}"))),
        }
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        match *self {
            WeightDistribution::Unit => 1.0,
            WeightDistribution::Integer { lo, hi } => rng.gen_range(lo..=hi) as f64,
            WeightDistribution::Uniform { lo, hi } => rng.gen_range(lo..hi),
        }
    }
}

/// Random triangle-free graph with maximum degree at most 3.
///
/// Repeatedly adds a uniformly chosen edge between two degree-deficient,
/// non-adjacent vertices without a common neighbor, until no such pair is
/// left. Deterministic in `(n, seed, weights)`.
pub fn random_triangle_free_subcubic(n: usize, seed: u64, weights: WeightDistribution) -> Result<WeightedGraph> {
    weights.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pairs = Vec::new();
    loop {
        let mut candidates = Vec::new();
        for u in 0..n {
            if neighbors[u].len() >= 3 {
                continue;
            }
            for v in u + 1..n {
                if neighbors[v].len() >= 3 || neighbors[u].contains(&v) {
                    continue;
                }
                if neighbors[u].iter().any(|x| neighbors[v].contains(x)) {
                    continue;
                }
                candidates.push((u, v));
            }
        }
        let Some(&(u, v)) = candidates.choose(&mut rng) else {
            break;
        };
        neighbors[u].push(v);
        neighbors[v].push(u);
        pairs.push((u, v));
    }
    let triples: Vec<_> = pairs.into_iter().map(|(u, v)| (u, v, weights.sample(&mut rng))).collect();
    WeightedGraph::new(n, triples)
}

/// Random connected graph: a random spanning tree (random attachment)
/// plus each remaining pair independently with probability `extra`.
pub fn random_connected(n: usize, extra: f64, seed: u64, weights: WeightDistribution) -> Result<WeightedGraph> {
    weights.validate()?;
    if n < 1 || !(0.0..=1.0).contains(&extra) {
        return Err(Error::InvalidParameter(format!("random_connected(n={n}, p={extra})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = std::collections::HashSet::new();
    let mut pairs = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let (u, v) = (order[i].min(parent), order[i].max(parent));
        present.insert((u, v));
        pairs.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) && rng.gen_bool(extra) {
                pairs.push((u, v));
            }
        }
    }
    let triples: Vec<_> = pairs.into_iter().map(|(u, v)| (u, v, weights.sample(&mut rng))).collect();
    WeightedGraph::new(n, triples)
}

/// A named generator with its parameters, as accepted on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Cycle { n: usize, weight: f64 },
    Path { n: usize, weight: f64 },
    Complete { n: usize, weight: f64 },
    Petersen { weight: f64 },
    PetersenC3 { matching_weight: f64, other_weight: f64 },
    StarCounterexample { big_weight: f64, l: usize },
    GadgetK33Subdivided,
    RandomTriangleFreeSubcubic { n: usize, seed: u64, weights: WeightDistribution },
    RandomConnected { n: usize, extra: f64, seed: u64, weights: WeightDistribution },
}

impl GeneratorSpec {
    pub const KINDS: [&'static str; 9] = [
        "cycle",
        "path",
        "complete",
        "petersen",
        "petersen_c3",
        "star_counterexample",
        "gadget_k33_subdivided",
        "random_triangle_free_subcubic",
        "random_connected",
    ];

    /// Parses `kind param...`. Random kinds take the seed from `default_seed`
    /// when it is not given explicitly.
    pub fn parse(kind: &str, params: &[String], default_seed: u64) -> Result<Self> {
        let bad = |why: &str| Error::InvalidParameter(format!("{kind}: {why}"));
        let num = |i: usize, default: Option<f64>| -> Result<f64> {
            match params.get(i) {
                Some(text) => text.parse().map_err(|_| bad(&format!("parameter {text:?} is not a number"))),
                None => default.ok_or_else(|| bad(&format!("missing parameter {}", i + 1))),
            }
        };
        let int = |i: usize, default: Option<usize>| -> Result<usize> {
            match params.get(i) {
                Some(text) => text.parse().map_err(|_| bad(&format!("parameter {text:?} is not an integer"))),
                None => default.ok_or_else(|| bad(&format!("missing parameter {}", i + 1))),
            }
        };
        let weights = |i: usize| -> Result<WeightDistribution> {
            match params.get(i).map(String::as_str) {
                None | Some("unit") => Ok(WeightDistribution::Unit),
                Some(text) => parse_distribution(text).ok_or_else(|| bad(&format!("bad weight distribution {text:?}"))),
            }
        };
        let spec = match kind {
            "cycle" => GeneratorSpec::Cycle { n: int(0, None)?, weight: num(1, Some(1.0))? },
            "path" => GeneratorSpec::Path { n: int(0, None)?, weight: num(1, Some(1.0))? },
            "complete" => GeneratorSpec::Complete { n: int(0, None)?, weight: num(1, Some(1.0))? },
            "petersen" => GeneratorSpec::Petersen { weight: num(0, Some(1.0))? },
            "petersen_c3" => GeneratorSpec::PetersenC3 {
                matching_weight: num(0, Some(10.0))?,
                other_weight: num(1, Some(1.0))?,
            },
            "star_counterexample" => GeneratorSpec::StarCounterexample {
                big_weight: num(0, None)?,
                l: int(1, None)?,
            },
            "gadget_k33_subdivided" => GeneratorSpec::GadgetK33Subdivided,
            "random_triangle_free_subcubic" => GeneratorSpec::RandomTriangleFreeSubcubic {
                n: int(0, None)?,
                seed: int(1, Some(default_seed as usize))? as u64,
                weights: weights(2)?,
            },
            "random_connected" => GeneratorSpec::RandomConnected {
                n: int(0, None)?,
                extra: num(1, Some(0.2))?,
                seed: int(2, Some(default_seed as usize))? as u64,
                weights: weights(3)?,
            },
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown generator {kind:?}; known: {}",
                    Self::KINDS.join(", ")
                )))
            }
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<WeightedGraph> {
        let graph = match *self {
            GeneratorSpec::Cycle { n, weight } => cycle(n, weight)?,
            GeneratorSpec::Path { n, weight } => path(n, weight)?,
            GeneratorSpec::Complete { n, weight } => complete(n, weight)?,
            GeneratorSpec::Petersen { weight } => petersen(weight),
            GeneratorSpec::PetersenC3 { matching_weight, other_weight } => petersen_c3(matching_weight, other_weight),
            GeneratorSpec::StarCounterexample { big_weight, l } => star_counterexample(big_weight, l)?,
            GeneratorSpec::GadgetK33Subdivided => gadget_k33_subdivided(),
            GeneratorSpec::RandomTriangleFreeSubcubic { n, seed, weights } => {
                random_triangle_free_subcubic(n, seed, weights)?
            }
            GeneratorSpec::RandomConnected { n, extra, seed, weights } => random_connected(n, extra, seed, weights)?,
        };
        Ok(graph)
    }
}

/// `unit`, `int:LO:HI` or `real:LO:HI`.
pub fn parse_distribution(text: &str) -> Option<WeightDistribution> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        ["unit"] => Some(WeightDistribution::Unit),
        ["int", lo, hi] => Some(WeightDistribution::Integer { lo: lo.parse().ok()?, hi: hi.parse().ok()? }),
        ["real", lo, hi] => Some(WeightDistribution::Uniform { lo: lo.parse().ok()?, hi: hi.parse().ok()? }),
        _ => None,
    }
}
