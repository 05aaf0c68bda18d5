//! JSON forms of permutations, arcs, diagrams, bricks and semibrick pairs.

use std::collections::BTreeMap;

use brickyard_core::field::{Field, Matrix};
use brickyard_core::quiver::{rep_of_string, string_of_rep, Algebra, D4Module, Representation};
use brickyard_core::{
    Action, Arc, ArcDiagram, ArcUniverse, BrickUniverse, Color, MatrixUniverse, Permutation,
    SemibrickPair, Side, StringBrick,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcJson {
    pub color: String,
    pub bottom: usize,
    pub top: usize,
    pub sides: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub nodes: usize,
    pub arcs: Vec<ArcJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringBrickJson {
    pub n: usize,
    pub support: [usize; 2],
    pub actions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char: Option<u64>,
}

/// A brick in any accepted spelling. The bare string form is a walk such as
/// `"2>3<4"` over `RA_n`, or one of `M`, `N`, `N'`, `E`, `1/23` over D4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BrickJson {
    Name(String),
    String(StringBrickJson),
    Representation(RepresentationJson),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub universe: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(rename = "D")]
    pub d: Vec<BrickJson>,
    #[serde(rename = "U")]
    pub u: Vec<BrickJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char: Option<u64>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn permutation_to_json(w: &Permutation) -> Vec<usize> {
    w.word().to_vec()
}

pub fn arc_to_json(a: &Arc) -> ArcJson {
    ArcJson {
        color: match a.color() {
            Color::Green => "green",
            Color::Red => "red",
        }
        .into(),
        bottom: a.bottom(),
        top: a.top(),
        sides: a.sides().iter().map(|s| s.letter().to_string()).collect(),
    }
}

pub fn arc_from_json(a: &ArcJson) -> Result<Arc, CliError> {
    let color = match a.color.as_str() {
        "green" => Color::Green,
        "red" => Color::Red,
        other => return Err(bad(format!("unknown arc color {other:?}"))),
    };
    let sides = a
        .sides
        .iter()
        .map(|s| match s.as_str() {
            "L" => Ok(Side::Left),
            "R" => Ok(Side::Right),
            other => Err(bad(format!("unknown side {other:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Arc::new(color, a.bottom, a.top, sides)?)
}

pub fn diagram_to_json(d: &ArcDiagram) -> DiagramJson {
    DiagramJson { nodes: d.nodes(), arcs: d.arcs().iter().map(arc_to_json).collect() }
}

/// Accepts single-colored and two-colored diagrams.
pub fn diagram_from_json(d: &DiagramJson) -> Result<ArcDiagram, CliError> {
    let arcs = d.arcs.iter().map(arc_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(ArcDiagram::two_colored(d.nodes, arcs)?)
}

pub fn string_brick_to_json(b: &StringBrick) -> StringBrickJson {
    let (p, q) = b.support();
    StringBrickJson {
        n: b.n(),
        support: [p, q],
        actions: b
            .actions()
            .iter()
            .map(|a| match a {
                Action::Down => "down".to_string(),
                Action::Up => "up".to_string(),
            })
            .collect(),
    }
}

fn string_brick_from_json(b: &StringBrickJson, n: usize) -> Result<StringBrick, CliError> {
    if b.n != n {
        return Err(bad(format!("brick over RA_{} in a pair over RA_{n}", b.n)));
    }
    let actions = b
        .actions
        .iter()
        .map(|a| match a.as_str() {
            "down" => Ok(Action::Down),
            "up" => Ok(Action::Up),
            other => Err(bad(format!("unknown action {other:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StringBrick::new(b.n, (b.support[0], b.support[1]), actions)?)
}

pub fn representation_to_json(m: &Representation) -> RepresentationJson {
    let alg = m.algebra();
    let (algebra, n) = match alg {
        Algebra::RA(n) => ("RA", Some(n)),
        Algebra::PiD4 => ("PiD4", None),
    };
    let dims = (1..=alg.vertices()).map(|v| (v.to_string(), m.dim(v))).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .filter(|(i, _)| !m.map(*i).is_zero())
        .map(|(i, a)| {
            let rows = m.map(i).to_rows().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
            (a.name.clone(), rows)
        })
        .collect();
    RepresentationJson {
        algebra: algebra.into(),
        n,
        dims,
        maps,
        char: Some(m.field().characteristic()),
    }
}

pub fn representation_from_json(
    r: &RepresentationJson,
    algebra: Algebra,
    field: Field,
) -> Result<Representation, CliError> {
    let named = match r.algebra.as_str() {
        "RA" => Algebra::RA(r.n.ok_or_else(|| bad("RA representation without n"))?),
        "PiD4" => Algebra::PiD4,
        other => return Err(bad(format!("unknown algebra {other:?}"))),
    };
    if named != algebra {
        return Err(bad("representation over a different algebra than the pair"));
    }
    let mut dims = vec![0; algebra.vertices() + 1];
    for (k, &d) in &r.dims {
        let v: usize = k.parse().map_err(|_| bad(format!("bad vertex {k:?}")))?;
        if v == 0 || v > algebra.vertices() {
            return Err(bad(format!("vertex {v} out of range")));
        }
        dims[v] = d;
    }
    let arrows = algebra.arrows();
    let mut maps: Vec<Matrix> =
        arrows.iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    for (name, rows) in &r.maps {
        let i = algebra.arrow_index(name).ok_or_else(|| bad(format!("unknown arrow {name:?}")))?;
        let reduced: Vec<Vec<u64>> =
            rows.iter().map(|row| row.iter().map(|&x| field.reduce(x)).collect()).collect();
        let (rr, cc) = (dims[arrows[i].target], dims[arrows[i].source]);
        maps[i] = Matrix::from_rows(rr, cc, &reduced)
            .map_err(|e| bad(format!("arrow {name}: {e}")))?;
    }
    Ok(Representation::new(algebra, field, dims, maps)?)
}

fn d4_by_name(name: &str) -> Option<D4Module> {
    D4Module::ALL.into_iter().find(|m| m.name() == name)
}

/// A pair read from JSON, in the universe it lives in. `d_order` and
/// `u_order` give, for each input position, the index in the canonical pair.
pub enum LoadedPair {
    Arcs {
        uni: ArcUniverse,
        pair: SemibrickPair<StringBrick>,
        d_order: Vec<usize>,
        u_order: Vec<usize>,
    },
    Matrices {
        uni: MatrixUniverse,
        pair: SemibrickPair<Representation>,
        d_order: Vec<usize>,
        u_order: Vec<usize>,
    },
}

impl LoadedPair {
    pub fn size(&self) -> usize {
        match self {
            LoadedPair::Arcs { pair, .. } => pair.len(),
            LoadedPair::Matrices { pair, .. } => pair.len(),
        }
    }
}

fn orders<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
    d: &[U::Brick],
    u: &[U::Brick],
) -> (Vec<usize>, Vec<usize>) {
    (
        d.iter().map(|b| pair.position_in_d(uni, b).expect("member")).collect(),
        u.iter().map(|b| pair.position_in_u(uni, b).expect("member")).collect(),
    )
}

pub fn load_pair(p: &PairJson, field: Field) -> Result<LoadedPair, CliError> {
    let field = match p.char {
        Some(c) => Field::new(c)?,
        None => field,
    };
    match p.universe.as_str() {
        "RA" => {
            let n = p.n.ok_or_else(|| bad("RA pair without n"))?;
            if n == 0 {
                return Err(bad("RA_0 has no bricks"));
            }
            let uni = ArcUniverse::new(n);
            let read = |b: &BrickJson| -> Result<StringBrick, CliError> {
                match b {
                    BrickJson::Name(s) => Ok(StringBrick::parse_walk(n, s)?),
                    BrickJson::String(s) => string_brick_from_json(s, n),
                    BrickJson::Representation(r) => {
                        let m = representation_from_json(r, Algebra::RA(n), field)?;
                        string_of_rep(&m).ok_or_else(|| {
                            CliError::Core(brickyard_core::Error::NotABrick(
                                "representation is not a string brick".into(),
                            ))
                        })
                    }
                }
            };
            let d = p.d.iter().map(read).collect::<Result<Vec<_>, _>>()?;
            let u = p.u.iter().map(read).collect::<Result<Vec<_>, _>>()?;
            let pair = SemibrickPair::new(&uni, d.clone(), u.clone());
            let (d_order, u_order) = orders(&uni, &pair, &d, &u);
            Ok(LoadedPair::Arcs { uni, pair, d_order, u_order })
        }
        "PiD4" => {
            let uni = MatrixUniverse::new(Algebra::PiD4, field);
            let read = |b: &BrickJson| -> Result<Representation, CliError> {
                match b {
                    BrickJson::Name(s) => d4_by_name(s)
                        .map(|m| m.build(field))
                        .ok_or_else(|| bad(format!("unknown D4 module {s:?}"))),
                    BrickJson::String(_) => Err(bad("string bricks belong to RA_n")),
                    BrickJson::Representation(r) => {
                        Ok(uni.normalize(representation_from_json(r, Algebra::PiD4, field)?))
                    }
                }
            };
            let d = p.d.iter().map(read).collect::<Result<Vec<_>, _>>()?;
            let u = p.u.iter().map(read).collect::<Result<Vec<_>, _>>()?;
            let pair = SemibrickPair::new(&uni, d.clone(), u.clone());
            let (d_order, u_order) = orders(&uni, &pair, &d, &u);
            Ok(LoadedPair::Matrices { uni, pair, d_order, u_order })
        }
        other => Err(bad(format!("unknown universe {other:?}"))),
    }
}

pub fn string_pair_to_json(n: usize, pair: &SemibrickPair<StringBrick>) -> PairJson {
    let conv = |bs: &[StringBrick]| bs.iter().map(|b| BrickJson::String(string_brick_to_json(b))).collect();
    PairJson { universe: "RA".into(), n: Some(n), d: conv(pair.d()), u: conv(pair.u()), char: None }
}

pub fn matrix_pair_to_json(uni: &MatrixUniverse, pair: &SemibrickPair<Representation>) -> PairJson {
    let conv = |bs: &[Representation]| {
        bs.iter().map(|b| BrickJson::Representation(representation_to_json(b))).collect()
    };
    let (universe, n) = match uni.algebra() {
        Algebra::RA(n) => ("RA", Some(n)),
        Algebra::PiD4 => ("PiD4", None),
    };
    PairJson {
        universe: universe.into(),
        n,
        d: conv(pair.d()),
        u: conv(pair.u()),
        char: Some(uni.field().characteristic()),
    }
}

pub fn loaded_to_json(p: &LoadedPair) -> PairJson {
    match p {
        LoadedPair::Arcs { uni, pair, .. } => string_pair_to_json(uni.n(), pair),
        LoadedPair::Matrices { uni, pair, .. } => matrix_pair_to_json(uni, pair),
    }
}

/// Matrix form of a string brick, for callers that want the oracle encoding.
pub fn string_as_representation(b: &StringBrick, field: Field) -> RepresentationJson {
    representation_to_json(&rep_of_string(b, field))
}
