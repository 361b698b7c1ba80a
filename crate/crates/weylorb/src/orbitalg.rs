//! Orbit algebra: products of plain and signed orbits decomposed into orbits,
//! and branching of signed orbits to subgroups.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{check_len, Error, Result};
use crate::linalg::{det_c, perm_sign, C64, Q};
use crate::orbitfn::{Kind, OrbitFunction};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::weyl::{orbit, signed_orbit, to_dominant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTerm {
    pub coeff: i64,
    pub label: Weight,
    /// Signed orbit O^±(label) if true, plain orbit O(label) otherwise.
    pub signed: bool,
}

/// Formal integer combination of orbits, sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitSum {
    pub terms: Vec<OrbitTerm>,
}

impl OrbitSum {
    fn from_map(map: BTreeMap<Weight, i64>, signed: bool) -> Self {
        OrbitSum {
            terms: map
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(label, coeff)| OrbitTerm { coeff, label, signed })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &Weight) -> i64 {
        self.terms.iter().find(|t| t.label == *label).map_or(0, |t| t.coeff)
    }

    /// Labels and coefficients as integer vectors, for compact comparisons.
    pub fn as_int_map(&self) -> BTreeMap<Vec<i64>, i64> {
        self.terms
            .iter()
            .map(|t| (t.label.to_ints().expect("integral label"), t.coeff))
            .collect()
    }
}

impl fmt::Display for OrbitSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let sign = if t.coeff < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = t.coeff.abs();
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{sign}")?;
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "O{}{}", if t.signed { "±" } else { "" }, t.label)?;
        }
        Ok(())
    }
}

fn require_strict(l: &Weight) -> Result<()> {
    if l.is_strictly_dominant() {
        Ok(())
    } else {
        Err(Error::NotStrictlyDominant(l.to_string()))
    }
}

fn require_dominant(l: &Weight) -> Result<()> {
    if l.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(l.to_string()))
    }
}

/// O(λ) ⊗ O^±(μ) by full expansion: every sum p+q is mapped to the dominant
/// chamber; wall images cancel and are dropped; the rest collect with sign.
pub fn product_plain_signed(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<OrbitSum> {
    check_len(rs.rank(), lambda.len())?;
    check_len(rs.rank(), mu.len())?;
    require_dominant(lambda)?;
    require_strict(mu)?;
    let plain = orbit(rs, lambda)?;
    let signed = signed_orbit(rs, mu)?;
    let mut map: BTreeMap<Weight, i64> = BTreeMap::new();
    for p in &plain {
        for (q, s) in &signed.points {
            let d = to_dominant(rs, &(p + q))?;
            if !d.on_wall {
                *map.entry(d.weight).or_default() += (*s * d.sign) as i64;
            }
        }
    }
    let order = rs.weyl_order() as i64;
    for (label, c) in map.iter_mut() {
        if *c % order != 0 {
            return Err(Error::Internal(format!("coefficient of {label} not divisible by |W|")));
        }
        *c /= order;
    }
    Ok(OrbitSum::from_map(map, true))
}

/// O(λ) ⊗ O^±(μ) through the coset shortcut: Σ_{λ'∈O(λ)} ±O^±(dom(λ'+μ)),
/// omitting wall terms.
pub fn product_plain_signed_shortcut(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<OrbitSum> {
    require_dominant(lambda)?;
    require_strict(mu)?;
    let mut map: BTreeMap<Weight, i64> = BTreeMap::new();
    for p in orbit(rs, lambda)? {
        let d = to_dominant(rs, &(&p + mu))?;
        if !d.on_wall {
            *map.entry(d.weight).or_default() += d.sign as i64;
        }
    }
    Ok(OrbitSum::from_map(map, true))
}

/// O^±(λ) ⊗ O^±(μ) as a combination of plain orbits. The signed multiset of
/// sums is W-invariant, so the coefficient of O(ν) is the signed count of
/// sums equal to the dominant ν.
pub fn product_signed_signed(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<OrbitSum> {
    check_len(rs.rank(), lambda.len())?;
    check_len(rs.rank(), mu.len())?;
    require_strict(lambda)?;
    require_strict(mu)?;
    let a = signed_orbit(rs, lambda)?;
    let b = signed_orbit(rs, mu)?;
    let mut map: BTreeMap<Weight, i64> = BTreeMap::new();
    for (p, s) in &a.points {
        for (q, t) in &b.points {
            let v = p + q;
            if v.is_dominant() {
                *map.entry(v).or_default() += (*s * *t) as i64;
            }
        }
    }
    Ok(OrbitSum::from_map(map, false))
}

/// O(λ) ⊗ O(μ) as a combination of plain orbits.
pub fn product_plain_plain(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<OrbitSum> {
    check_len(rs.rank(), lambda.len())?;
    check_len(rs.rank(), mu.len())?;
    require_dominant(lambda)?;
    require_dominant(mu)?;
    let a = orbit(rs, lambda)?;
    let b = orbit(rs, mu)?;
    let mut map: BTreeMap<Weight, i64> = BTreeMap::new();
    for p in &a {
        for q in &b {
            let v = p + q;
            if v.is_dominant() {
                *map.entry(v).or_default() += 1;
            }
        }
    }
    Ok(OrbitSum::from_map(map, false))
}

/// Function-level expansion Σ c_ν f_ν with f_ν of the stated kind.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSum {
    pub terms: Vec<(f64, Weight, Kind)>,
}

impl FunctionSum {
    pub fn eval(&self, rs: &RootSystem, x: &[f64]) -> Result<C64> {
        let mut acc = C64::zero();
        for (c, label, kind) in &self.terms {
            acc += OrbitFunction::new(rs, *kind, label)?.eval(x) * *c;
        }
        Ok(acc)
    }
}

fn stab_factor(rs: &RootSystem, kind: Kind, l: &Weight) -> Result<f64> {
    Ok(if kind == Kind::NormalizedSymmetric {
        (rs.weyl_order() / orbit(rs, l)?.len() as u64) as f64
    } else {
        1.0
    })
}

/// Expand f_λ · g_μ: two antisymmetric factors give symmetric φ terms, a
/// symmetric and an antisymmetric factor give ϕ terms, two symmetric factors
/// give φ terms.
pub fn expand_function_product(
    rs: &RootSystem,
    kind_a: Kind,
    lambda: &Weight,
    kind_b: Kind,
    mu: &Weight,
) -> Result<FunctionSum> {
    use Kind::*;
    let scale = stab_factor(rs, kind_a, lambda)? * stab_factor(rs, kind_b, mu)?;
    let (sum, out_kind) = match (kind_a, kind_b) {
        (Antisymmetric, Antisymmetric) => (product_signed_signed(rs, lambda, mu)?, Symmetric),
        (Antisymmetric, _) => (product_plain_signed(rs, mu, lambda)?, Antisymmetric),
        (_, Antisymmetric) => (product_plain_signed(rs, lambda, mu)?, Antisymmetric),
        _ => (product_plain_plain(rs, lambda, mu)?, Symmetric),
    };
    Ok(FunctionSum {
        terms: sum
            .terms
            .into_iter()
            .map(|t| (t.coeff as f64 * scale, t.label, out_kind))
            .collect(),
    })
}

/// Orthogonal-coordinate block of a branching target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockType {
    /// Symmetric group on the raw coordinates (GL type).
    A,
    /// Signed permutations; B and C share the orthogonal picture.
    BC,
    /// Signed permutations with an even number of sign changes.
    D,
}

impl BlockType {
    /// Strict dominance of a block label.
    pub fn is_dominant(self, v: &[Q]) -> bool {
        let dec = v.windows(2).all(|w| w[0] > w[1]);
        match self {
            BlockType::A => dec,
            BlockType::BC => dec && v.last().map_or(true, |x| x.is_positive()),
            BlockType::D => {
                let k = v.len();
                if k < 2 {
                    return true;
                }
                v[..k - 1].windows(2).all(|w| w[0] > w[1]) && v[k - 2] > v[k - 1].abs()
            }
        }
    }

    /// Antisymmetric orbit function of a block in orthogonal coordinates.
    pub fn eval(self, m: &[f64], x: &[f64]) -> C64 {
        let k = m.len();
        if k == 0 {
            return C64::one();
        }
        let mat = |f: &dyn Fn(f64) -> C64| -> Vec<Vec<C64>> {
            (0..k).map(|i| (0..k).map(|j| f(2.0 * PI * m[i] * x[j])).collect()).collect()
        };
        let two_i_k = Complex64::new(0.0, 2.0).powi(k as i32);
        match self {
            BlockType::A => det_c(mat(&|t| C64::from_polar(1.0, t))),
            BlockType::BC => two_i_k * det_c(mat(&|t| C64::new(t.sin(), 0.0))),
            BlockType::D => {
                det_c(mat(&|t| C64::new(t.cos(), 0.0))) * 2f64.powi(k as i32 - 1)
                    + two_i_k * det_c(mat(&|t| C64::new(t.sin(), 0.0))) * 0.5
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchRule {
    /// Remove the first orthogonal coordinate.
    DropFirst,
    /// Remove the last orthogonal coordinate.
    DropLast,
    /// Split the coordinates into the first p and the rest.
    Split(usize),
}

impl FromStr for BranchRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        match s.as_str() {
            "drop-first" => Ok(BranchRule::DropFirst),
            "drop-last" => Ok(BranchRule::DropLast),
            _ => s
                .strip_prefix("split:")
                .and_then(|p| p.parse().ok())
                .map(BranchRule::Split)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown branch rule {s:?}"))),
        }
    }
}

impl fmt::Display for BranchRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchRule::DropFirst => write!(f, "drop-first"),
            BranchRule::DropLast => write!(f, "drop-last"),
            BranchRule::Split(p) => write!(f, "split:{p}"),
        }
    }
}

fn source_block(rs: &RootSystem) -> Result<BlockType> {
    match rs.family() {
        Family::A => Ok(BlockType::A),
        Family::B | Family::C => Ok(BlockType::BC),
        Family::D => Ok(BlockType::D),
        _ => Err(Error::Unsupported { op: "branching", diagram: rs.id().to_string() }),
    }
}

/// Target blocks of a rule, as (type, coordinate range).
pub fn target_blocks(rs: &RootSystem, rule: BranchRule) -> Result<Vec<(BlockType, std::ops::Range<usize>)>> {
    let src = source_block(rs)?;
    let d = rs.orth_dim();
    let bad = || Error::IncompatibleRule { rule: rule.to_string(), diagram: rs.id().to_string() };
    match rule {
        BranchRule::DropFirst => Ok(vec![(src, 1..d)]),
        BranchRule::DropLast => {
            if src == BlockType::A {
                Ok(vec![(src, 0..d - 1)])
            } else {
                Err(bad())
            }
        }
        BranchRule::Split(p) => {
            if p == 0 || p >= d {
                return Err(bad());
            }
            Ok(vec![(BlockType::A, 0..p), (src, p..d)])
        }
    }
}

/// Signed orbit of an exact orthogonal label: (point, sign) pairs.
pub fn signed_orbit_orth(block: BlockType, m: &[Q]) -> Vec<(Vec<Q>, i8)> {
    let k = m.len();
    let mut out = Vec::new();
    for perm in (0..k).permutations(k) {
        let base: Vec<Q> = perm.iter().map(|&i| m[i]).collect();
        let ps = perm_sign(&perm) as i8;
        match block {
            BlockType::A => out.push((base, ps)),
            BlockType::BC | BlockType::D => {
                for flips in 0u32..(1 << k) {
                    let odd = flips.count_ones() % 2 == 1;
                    if block == BlockType::D && odd {
                        continue;
                    }
                    let v: Vec<Q> = base
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| if flips & (1 << i) != 0 { -c } else { c })
                        .collect();
                    let s = if block == BlockType::BC && odd { -ps } else { ps };
                    out.push((v, s));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchTerm {
    pub coeff: i64,
    /// One orthogonal label per target block.
    pub labels: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchSum {
    pub blocks: Vec<(BlockType, std::ops::Range<usize>)>,
    pub terms: Vec<BranchTerm>,
    /// Source points whose projection lies on a wall of the target group.
    pub wall_points: usize,
    /// Source points projecting onto dominant target labels.
    pub dominant_points: usize,
}

impl BranchSum {
    pub fn target_group_order(&self) -> u64 {
        self.blocks
            .iter()
            .map(|(b, r)| {
                let k = r.len() as u64;
                let f: u64 = (1..=k).product();
                match b {
                    BlockType::A => f,
                    BlockType::BC => f << k,
                    BlockType::D => {
                        if k == 0 {
                            1
                        } else {
                            f << (k - 1)
                        }
                    }
                }
            })
            .product()
    }

    /// Σ c_ν Π_blocks ϕ_ν(x restricted to the block).
    pub fn eval(&self, x: &[f64]) -> C64 {
        self.terms
            .iter()
            .map(|t| {
                let mut v = C64::one() * t.coeff as f64;
                for ((b, r), label) in self.blocks.iter().zip(&t.labels) {
                    let m: Vec<f64> = label.iter().map(|c| c.to_f64().unwrap()).collect();
                    v *= b.eval(&m, &x[r.clone()]);
                }
                v
            })
            .sum()
    }
}

/// Branch the signed orbit of the orthogonal label `m` under `rule`.
/// The coefficient of a target label is the signed count of source points
/// projecting onto it; projections onto target walls cancel in pairs.
pub fn branch(rs: &RootSystem, rule: BranchRule, m: &[Q]) -> Result<BranchSum> {
    let src = source_block(rs)?;
    check_len(rs.orth_dim(), m.len())?;
    if !src.is_dominant(m) {
        return Err(Error::NotStrictlyDominant(format!("{m:?}")));
    }
    let blocks = target_blocks(rs, rule)?;
    let mut map: BTreeMap<Vec<Vec<Q>>, i64> = BTreeMap::new();
    let mut wall_points = 0;
    let mut dominant_points = 0;
    for (p, s) in signed_orbit_orth(src, m) {
        let labels: Vec<Vec<Q>> = blocks.iter().map(|(_, r)| p[r.clone()].to_vec()).collect();
        if blocks.iter().zip(&labels).all(|((b, _), l)| b.is_dominant(l)) {
            dominant_points += 1;
            *map.entry(labels).or_default() += s as i64;
        } else {
            wall_points += 1;
        }
    }
    let terms = map
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(labels, coeff)| BranchTerm { coeff, labels })
        .rev()
        .collect();
    Ok(BranchSum { blocks, terms, wall_points, dominant_points })
}

/// Branch a weight given in ω-coordinates.
pub fn branch_weight(rs: &RootSystem, rule: BranchRule, lambda: &Weight) -> Result<BranchSum> {
    let m = rs.to_orthogonal_exact(lambda)?;
    branch(rs, rule, &m)
}

/// Source antisymmetric function in orthogonal coordinates (GL form for A).
pub fn source_eval(rs: &RootSystem, m: &[Q], x: &[f64]) -> Result<C64> {
    let src = source_block(rs)?;
    let mf: Vec<f64> = m.iter().map(|c| c.to_f64().unwrap()).collect();
    Ok(src.eval(&mf, x))
}

/// |source(x) − Σ terms(x)| at a point of the source orthogonal space where
/// dropped coordinates are set to zero.
pub fn branch_residual(rs: &RootSystem, rule: BranchRule, m: &[Q], x_target: &[f64]) -> Result<f64> {
    let b = branch(rs, rule, m)?;
    let d = rs.orth_dim();
    let x: Vec<f64> = match rule {
        BranchRule::DropFirst => std::iter::once(0.0).chain(x_target.iter().copied()).collect(),
        BranchRule::DropLast => x_target.iter().copied().chain(std::iter::once(0.0)).collect(),
        BranchRule::Split(_) => x_target.to_vec(),
    };
    check_len(d, x.len())?;
    let lhs = source_eval(rs, m, &x)?;
    Ok((lhs - b.eval(&x)).norm())
}
