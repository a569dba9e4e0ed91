//! Words in named maps: "lambda gamma", "-sigma iota", "phi(3)^-1", "delta9^T".
//!
//! Tokens are separated by whitespace, '*' or '.', and composed left to right
//! (the rightmost token acts first). A token is `[-]name[(k)][^T | ^-1 | ^n]`,
//! where `(k)` is the parameter θ = ζ24^k of φ-type maps.

use crate::cayley::{self, OctMapName};
use crate::e8::{E8MapName, E8Space};
use crate::exactfield::{CycNum, FieldError, SemilinearOp};
use crate::freudenthal::{self, FMapName};
use crate::jordan::{self, JordanMapName};

/// The space a word acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// the octonions
    Oct,
    /// J^C
    Jordan,
    /// P^C
    Freudenthal,
    /// e8^C
    E8,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Oct => "oct",
            Level::Jordan => "jordan",
            Level::Freudenthal => "freudenthal",
            Level::E8 => "e8",
        }
    }

    /// Dimension of the space the level's operators act on.
    pub fn dim(self) -> usize {
        match self {
            Level::Oct => 8,
            Level::Jordan => jordan::DIM,
            Level::Freudenthal => crate::freudenthal::DIM,
            Level::E8 => crate::e8::DIM,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum WordError {
    #[error("unknown map {0:?} on {1}")]
    Unknown(String, &'static str),
    #[error("malformed token {0:?}")]
    Malformed(String),
    #[error("empty word")]
    Empty,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{0}")]
    Other(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub negate: bool,
    pub name: &'a str,
    pub param: Option<i64>,
    pub suffix: Suffix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suffix {
    None,
    Transpose,
    Power(i32),
}

pub fn split(word: &str) -> Vec<&str> {
    word.split(|c: char| c.is_whitespace() || c == '*' || c == '.').filter(|t| !t.is_empty()).collect()
}

pub fn parse_token(raw: &str) -> Result<Token<'_>, WordError> {
    let bad = || WordError::Malformed(raw.to_string());
    let (negate, rest) = match raw.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, raw),
    };
    let (head, suffix) = match rest.split_once('^') {
        None => (rest, Suffix::None),
        Some((h, "T")) => (h, Suffix::Transpose),
        Some((h, p)) => (h, Suffix::Power(p.parse().map_err(|_| bad())?)),
    };
    let (name, param) = match head.split_once('(') {
        None => (head, None),
        Some((n, p)) => {
            let k = p.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            (n, Some(k))
        }
    };
    if name.is_empty() {
        return Err(bad());
    }
    Ok(Token { negate, name, param, suffix })
}

/// Compose a word, resolving each token name (with its parameter) through `base`.
pub fn compose(
    word: &str,
    base: impl Fn(&str, Option<i64>) -> Result<SemilinearOp, WordError>,
    transpose: impl Fn(&SemilinearOp) -> Result<SemilinearOp, WordError>,
) -> Result<SemilinearOp, WordError> {
    let mut acc: Option<SemilinearOp> = None;
    for raw in split(word) {
        let t = parse_token(raw)?;
        let mut g = base(t.name, t.param)?;
        g = match t.suffix {
            Suffix::None => g,
            Suffix::Transpose => transpose(&g)?,
            Suffix::Power(p) if p >= 0 => g.pow(p as u32),
            Suffix::Power(p) => g.inverse()?.pow(p.unsigned_abs()),
        };
        if t.negate {
            g = g.neg();
        }
        acc = Some(match acc {
            None => g,
            Some(a) => a.compose(&g),
        });
    }
    acc.ok_or(WordError::Empty)
}

fn zeta(k: Option<i64>, raw: &str) -> Result<CycNum, WordError> {
    k.map(CycNum::zeta_pow).ok_or_else(|| WordError::Malformed(format!("{raw} needs a parameter (k)")))
}

pub fn oct_token(name: &str, param: Option<i64>) -> Result<SemilinearOp, WordError> {
    let unknown = || WordError::Unknown(name.into(), "oct");
    if param.is_some() {
        return Err(unknown());
    }
    Ok(cayley::named_oct_map(OctMapName::parse(name).ok_or_else(unknown)?))
}

pub fn jordan_name(name: &str, param: Option<i64>) -> Result<JordanMapName, WordError> {
    let unknown = || WordError::Unknown(name.into(), "jordan");
    Ok(match (name, param) {
        ("sigma", None) => JordanMapName::Sigma,
        ("sigma_prime", None) => JordanMapName::SigmaPrime,
        ("gamma", None) => JordanMapName::Gamma,
        ("gamma_H", None) => JordanMapName::GammaH,
        ("gamma_C", None) => JordanMapName::GammaC,
        ("delta9", None) => JordanMapName::Delta9,
        ("rho2", None) => JordanMapName::Rho2,
        ("tau", None) => JordanMapName::Tau,
        ("phi1", k) => JordanMapName::Phi1(zeta(k, name)?),
        ("phi2", k) => JordanMapName::Phi2(zeta(k, name)?),
        (t, None) => JordanMapName::Delta(t.strip_prefix("delta").and_then(|d| d.parse().ok()).ok_or_else(unknown)?),
        _ => return Err(unknown()),
    })
}

pub fn jordan_token(name: &str, param: Option<i64>) -> Result<SemilinearOp, WordError> {
    Ok(jordan::named_jordan_map(&jordan_name(name, param)?)?)
}

pub fn f_name(name: &str, param: Option<i64>) -> Result<FMapName, WordError> {
    match (name, param) {
        ("phi", k) => Ok(FMapName::Phi(zeta(k, name)?)),
        (n, None) => FMapName::parse(n).ok_or_else(|| WordError::Unknown(name.into(), "freudenthal")),
        _ => Err(WordError::Unknown(name.into(), "freudenthal")),
    }
}

pub fn f_token(name: &str, param: Option<i64>) -> Result<SemilinearOp, WordError> {
    Ok(freudenthal::named_f_map(&f_name(name, param)?)?)
}

pub fn e8_name(name: &str, param: Option<i64>) -> Result<E8MapName, WordError> {
    match param {
        None => E8MapName::parse(name).ok_or_else(|| WordError::Unknown(name.into(), "e8")),
        Some(_) => Ok(E8MapName::Lift(f_name(name, param)?)),
    }
}

pub fn e8_token(space: &E8Space, name: &str, param: Option<i64>) -> Result<SemilinearOp, WordError> {
    space.named_e8_map(&e8_name(name, param)?).map_err(|e| WordError::Other(e.to_string()))
}

/// Operator of a word at a level. The E8 level needs the coordinate space.
type TokenFn<'a> = dyn Fn(&str, Option<i64>) -> Result<SemilinearOp, WordError> + 'a;

pub fn group_word(level: Level, word: &str, space: Option<&E8Space>) -> Result<SemilinearOp, WordError> {
    let no_transpose = |_: &SemilinearOp| Err(WordError::Other(format!("transpose is not defined on {}", level.name())));
    // "1" is the identity at every level
    let with_one = |base: &TokenFn, n: &str, p: Option<i64>| match (n, p) {
        ("1", None) => Ok(SemilinearOp::identity(level.dim())),
        _ => base(n, p),
    };
    match level {
        Level::Oct => compose(word, |n, p| with_one(&oct_token, n, p), no_transpose),
        Level::Jordan => compose(word, |n, p| with_one(&jordan_token, n, p), |g| Ok(jordan::transpose_op(g))),
        Level::Freudenthal => compose(word, |n, p| with_one(&f_token, n, p), no_transpose),
        Level::E8 => {
            let sp = space.ok_or_else(|| WordError::Other("e8 words need the e8 coordinate space".into()))?;
            compose(word, |n, p| with_one(&|n, p| e8_token(sp, n, p), n, p), no_transpose)
        }
    }
}
