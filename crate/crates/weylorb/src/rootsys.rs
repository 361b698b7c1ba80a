//! Static data of connected root systems: Cartan matrices, the quadratic form
//! metric, marks, highest root, and coordinate conversions.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{check_len, Error, Result};
use crate::linalg::{factorial, rat_inverse, rat_matmul, Q};
use crate::weyl::WeylGroup;

/// Default cap on the number of group elements enumerated and cached.
pub const DEFAULT_GROUP_LIMIT: u64 = 500_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Families with an orthogonal-coordinate model and an enumerable group.
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramId {
    pub family: Family,
    pub rank: usize,
}

impl DiagramId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DiagramId { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }
}

impl fmt::Display for DiagramId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for DiagramId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::ParseDiagram(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::ParseDiagram(s.to_string()))?;
        DiagramId::new(family, rank)
    }
}

/// Exact rational coordinate vector. In the ω-basis this is a weight or a
/// point θ; the same type carries α- and α^∨-coordinates where stated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![Q::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| Q::from_integer(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|c| c.is_positive())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: Q) -> Self {
        Weight(self.0.iter().map(|&x| x * c).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|c| c.to_f64().unwrap()).collect()
    }

    /// Integer coordinates, if all coordinates are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

/// Comma-separated coordinates, each an integer or a fraction "p/q".
impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<Q>()
                    .map_err(|_| Error::InvalidParameter(format!("bad coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Omega,
    Alpha,
    AlphaCheck,
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "omega" | "w" => Ok(Basis::Omega),
            "alpha" | "a" => Ok(Basis::Alpha),
            "alpha_check" | "alphacheck" | "coroot" => Ok(Basis::AlphaCheck),
            _ => Err(Error::InvalidParameter(format!("unknown basis {s:?}"))),
        }
    }
}

/// Point or weight in orthogonal coordinates. For A_n the vector has n+1
/// entries whose sum is `sum`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthPoint {
    pub coords: Vec<f64>,
    pub sum: f64,
}

impl OrthPoint {
    pub fn new(coords: Vec<f64>) -> Self {
        let sum = coords.iter().sum();
        OrthPoint { coords, sum }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    id: DiagramId,
    cartan: Vec<Vec<i64>>,
    cartan_q: Vec<Vec<Q>>,
    cartan_inv: Vec<Vec<Q>>,
    root_norms: Vec<Q>,
    metric: Vec<Vec<Q>>,
    metric_inv: Vec<Vec<Q>>,
    metric_f: Vec<Vec<f64>>,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    weyl_order: u64,
    positive_roots: Vec<Vec<i64>>,
    orth_rows: Option<Vec<Vec<Q>>>,
    group: OnceLock<std::result::Result<WeylGroup, Error>>,
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn cartan_and_norms(id: DiagramId) -> (Vec<Vec<i64>>, Vec<Q>, Vec<i64>) {
    let n = id.rank;
    let two = Q::from_integer(2);
    let one = Q::one();
    match id.family {
        Family::A => (chain(n), vec![two; n], vec![1; n]),
        Family::B => {
            let mut m = chain(n);
            m[n - 2][n - 1] = -2;
            let mut norms = vec![two; n];
            norms[n - 1] = one;
            let mut marks = vec![2; n];
            marks[0] = 1;
            (m, norms, marks)
        }
        Family::C => {
            let mut m = chain(n);
            m[n - 1][n - 2] = -2;
            let mut norms = vec![one; n];
            norms[n - 1] = two;
            let mut marks = vec![2; n];
            marks[n - 1] = 1;
            (m, norms, marks)
        }
        Family::D => {
            let mut m = chain(n - 1);
            m.iter_mut().for_each(|r| r.push(0));
            m.push(vec![0; n]);
            m[n - 1][n - 1] = 2;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            let mut marks = vec![2; n];
            marks[0] = 1;
            marks[n - 2] = 1;
            marks[n - 1] = 1;
            (m, vec![two; n], marks)
        }
        Family::G => (
            vec![vec![2, -3], vec![-1, 2]],
            vec![two, Q::new(2, 3)],
            vec![2, 3],
        ),
        Family::F => (
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
            vec![two, two, one, one],
            vec![2, 3, 4, 2],
        ),
        Family::E => {
            let (branch_at, marks) = match n {
                6 => (2, vec![1, 2, 3, 2, 1, 2]),
                7 => (2, vec![2, 3, 4, 3, 2, 1, 2]),
                _ => (4, vec![2, 3, 4, 5, 6, 4, 2, 3]),
            };
            let mut m = chain(n - 1);
            m.iter_mut().for_each(|r| r.push(0));
            m.push(vec![0; n]);
            m[n - 1][n - 1] = 2;
            m[branch_at][n - 1] = -1;
            m[n - 1][branch_at] = -1;
            (m, vec![two; n], marks)
        }
    }
}

fn weyl_order_formula(id: DiagramId) -> u64 {
    let n = id.rank as u64;
    match id.family {
        Family::A => factorial(n + 1),
        Family::B | Family::C => (1u64 << n) * factorial(n),
        Family::D => (1u64 << (n - 1)) * factorial(n),
        Family::G => 12,
        Family::F => 1152,
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
    }
}

/// Positive roots in α-coordinates by root strings: β + α_i is a root iff
/// p − ⟨β, α_i^∨⟩ > 0 where p is the length of the α_i-string below β.
fn positive_roots_by_strings(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    all.extend(level.iter().cloned());
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next.into_iter().collect();
    }
    let mut v: Vec<Vec<i64>> = all.into_iter().collect();
    v.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    v
}

fn orth_rows(id: DiagramId) -> Option<Vec<Vec<Q>>> {
    let n = id.rank;
    let half = Q::new(1, 2);
    let one = Q::one();
    let rows = match id.family {
        Family::A => (1..=n)
            .map(|i| {
                let shift = Q::new(i as i64, (n + 1) as i64);
                (0..=n).map(|k| if k < i { one - shift } else { -shift }).collect()
            })
            .collect(),
        Family::B => (1..=n)
            .map(|i| {
                if i < n {
                    (0..n).map(|k| if k < i { one } else { Q::zero() }).collect()
                } else {
                    vec![half; n]
                }
            })
            .collect(),
        Family::C => (1..=n)
            .map(|i| (0..n).map(|k| if k < i { one } else { Q::zero() }).collect())
            .collect(),
        Family::D => (1..=n)
            .map(|i| {
                if i <= n - 2 {
                    (0..n).map(|k| if k < i { one } else { Q::zero() }).collect()
                } else if i == n - 1 {
                    (0..n).map(|k| if k < n - 1 { half } else { -half }).collect()
                } else {
                    vec![half; n]
                }
            })
            .collect(),
        _ => return None,
    };
    Some(rows)
}

impl RootSystem {
    pub fn build(id: DiagramId) -> Result<Self> {
        let id = DiagramId::new(id.family, id.rank)?;
        let n = id.rank;
        let (cartan, root_norms, marks) = cartan_and_norms(id);
        let cartan_q: Vec<Vec<Q>> = cartan
            .iter()
            .map(|r| r.iter().map(|&v| Q::from_integer(v)).collect())
            .collect();
        let cartan_inv = rat_inverse(&cartan_q)
            .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        let d: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { root_norms[i] / 2 } else { Q::zero() })
                    .collect()
            })
            .collect();
        let metric = rat_matmul(&cartan_inv, &d);
        let metric_inv = rat_inverse(&metric)
            .ok_or_else(|| Error::Internal("singular metric".into()))?;
        let metric_f = metric
            .iter()
            .map(|r| r.iter().map(|c| c.to_f64().unwrap()).collect())
            .collect();
        let comarks = marks
            .iter()
            .zip(&root_norms)
            .map(|(&m, &nrm)| {
                let c = Q::from_integer(m) * nrm / 2;
                c.to_integer()
            })
            .collect();
        let positive_roots = positive_roots_by_strings(&cartan);
        Ok(RootSystem {
            id,
            cartan,
            cartan_q,
            cartan_inv,
            root_norms,
            metric,
            metric_inv,
            metric_f,
            marks,
            comarks,
            weyl_order: weyl_order_formula(id),
            positive_roots,
            orth_rows: orth_rows(id),
            group: OnceLock::new(),
        })
    }

    /// Parse an "A2"-style label and build.
    pub fn from_label(label: &str) -> Result<Self> {
        RootSystem::build(label.parse()?)
    }

    pub fn id(&self) -> DiagramId {
        self.id
    }

    pub fn family(&self) -> Family {
        self.id.family
    }

    pub fn rank(&self) -> usize {
        self.id.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &[Vec<Q>] {
        &self.cartan_inv
    }

    pub fn root_norms(&self) -> &[Q] {
        &self.root_norms
    }

    /// S = M⁻¹D with D = diag(⟨α_i,α_i⟩/2).
    pub fn metric(&self) -> &[Vec<Q>] {
        &self.metric
    }

    /// S⁻¹ = D⁻¹M.
    pub fn metric_inv(&self) -> &[Vec<Q>] {
        &self.metric_inv
    }

    pub fn metric_f64(&self) -> &[Vec<f64>] {
        &self.metric_f
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// Coefficients of the highest coroot in the α^∨-basis, i.e. the marks
    /// of the dual root system. They bound the label alcove of the finite
    /// transforms.
    pub fn dual_marks(&self) -> Vec<i64> {
        let n = self.rank();
        let t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| self.cartan[j][i]).collect()).collect();
        positive_roots_by_strings(&t).pop().expect("nonempty root system")
    }

    /// |P/Q| = |P^∨/Q^∨| = det of the Cartan matrix.
    pub fn lattice_index(&self) -> i64 {
        let d = crate::linalg::det_f(
            self.cartan.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect(),
        );
        d.round() as i64
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![Q::one(); self.rank()])
    }

    /// Positive roots in α-coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in ω-coordinates.
    pub fn positive_roots_omega(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .map(|a| {
                let v: Vec<Q> = a.iter().map(|&x| Q::from_integer(x)).collect();
                Weight(self.alpha_to_omega(&v))
            })
            .collect()
    }

    /// Highest root ξ in ω-coordinates.
    pub fn highest_root(&self) -> Weight {
        let marks: Vec<Q> = self.marks.iter().map(|&m| Q::from_integer(m)).collect();
        Weight(self.alpha_to_omega(&marks))
    }

    pub(crate) fn group_cache(&self) -> &OnceLock<std::result::Result<WeylGroup, Error>> {
        &self.group
    }

    fn check(&self, v: &[Q]) -> Result<()> {
        check_len(self.rank(), v.len())
    }

    /// x·S·yᵀ, exact.
    pub fn inner(&self, x: &Weight, y: &Weight) -> Result<Q> {
        self.check(&x.0)?;
        self.check(&y.0)?;
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if x.0[i].is_zero() {
                continue;
            }
            let mut row = Q::zero();
            for j in 0..n {
                row += self.metric[i][j] * y.0[j];
            }
            acc += x.0[i] * row;
        }
        Ok(acc)
    }

    pub fn inner_f64(&self, x: &[f64], y: &[f64]) -> f64 {
        let n = self.rank();
        let mut acc = 0.0;
        for i in 0..n {
            let mut row = 0.0;
            for j in 0..n {
                row += self.metric_f[i][j] * y[j];
            }
            acc += x[i] * row;
        }
        acc
    }

    /// S·y, so that ⟨x, y⟩ = x · (S y).
    pub fn metric_apply_f64(&self, y: &[f64]) -> Vec<f64> {
        self.metric_f
            .iter()
            .map(|r| r.iter().zip(y).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn alpha_to_omega(&self, a: &[Q]) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|k| (0..n).fold(Q::zero(), |acc, j| acc + a[j] * self.cartan_q[j][k]))
            .collect()
    }

    fn omega_to_alpha(&self, w: &[Q]) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).fold(Q::zero(), |acc, k| acc + w[k] * self.cartan_inv[k][j]))
            .collect()
    }

    /// Change coordinates between the ω-, α- and α^∨-bases.
    pub fn convert_basis(&self, v: &[Q], from: Basis, to: Basis) -> Result<Vec<Q>> {
        self.check(v)?;
        let alpha: Vec<Q> = match from {
            Basis::Alpha => v.to_vec(),
            Basis::Omega => self.omega_to_alpha(v),
            Basis::AlphaCheck => v
                .iter()
                .zip(&self.root_norms)
                .map(|(&c, &nrm)| c * 2 / nrm)
                .collect(),
        };
        Ok(match to {
            Basis::Alpha => alpha,
            Basis::Omega => {
                if from == Basis::Omega {
                    v.to_vec()
                } else {
                    self.alpha_to_omega(&alpha)
                }
            }
            Basis::AlphaCheck => alpha
                .iter()
                .zip(&self.root_norms)
                .map(|(&c, &nrm)| c * nrm / 2)
                .collect(),
        })
    }

    /// ⟨x, ξ⟩ = Σ q_i x_i for x in ω-coordinates.
    pub fn pair_highest_root(&self, x: &Weight) -> Q {
        x.0.iter()
            .zip(&self.comarks)
            .fold(Q::zero(), |acc, (&c, &q)| acc + c * q)
    }

    pub fn pair_highest_root_f64(&self, x: &[f64]) -> f64 {
        x.iter().zip(&self.comarks).map(|(c, &q)| c * q as f64).sum()
    }

    /// ⟨μ, α⟩ for μ in ω-coordinates and α in α-coordinates.
    pub fn pair_root(&self, mu: &Weight, alpha: &[i64]) -> Q {
        (0..self.rank()).fold(Q::zero(), |acc, i| {
            acc + mu.0[i] * Q::from_integer(alpha[i]) * self.root_norms[i] / 2
        })
    }

    pub fn pair_root_f64(&self, mu: &[f64], alpha: &[i64]) -> f64 {
        (0..self.rank())
            .map(|i| mu[i] * alpha[i] as f64 * self.root_norms[i].to_f64().unwrap() / 2.0)
            .sum()
    }

    fn orth(&self, op: &'static str) -> Result<&Vec<Vec<Q>>> {
        self.orth_rows.as_ref().ok_or_else(|| Error::Unsupported {
            op,
            diagram: self.id.to_string(),
        })
    }

    /// Number of orthogonal coordinates: n+1 for A_n, n otherwise.
    pub fn orth_dim(&self) -> usize {
        if self.family() == Family::A {
            self.rank() + 1
        } else {
            self.rank()
        }
    }

    /// Ratio between the Euclidean product of orthogonal images and ⟨·,·⟩.
    /// It is 2 for C_n, where ω_i = e_1+…+e_i, and 1 otherwise.
    pub fn orth_scale(&self) -> Q {
        if self.family() == Family::C {
            Q::from_integer(2)
        } else {
            Q::one()
        }
    }

    /// Orthogonal coordinates of a weight, exact. A_n uses the zero-sum gauge.
    pub fn to_orthogonal_exact(&self, lambda: &Weight) -> Result<Vec<Q>> {
        let rows = self.orth("orthogonal coordinates")?;
        self.check(&lambda.0)?;
        let d = self.orth_dim();
        let mut out = vec![Q::zero(); d];
        for (c, row) in lambda.0.iter().zip(rows) {
            for k in 0..d {
                out[k] += *c * row[k];
            }
        }
        Ok(out)
    }

    pub fn to_orthogonal(&self, lambda: &Weight) -> Result<OrthPoint> {
        self.to_orthogonal_offset(lambda, 0.0)
    }

    /// A_n only: shift every coordinate by `r` (so the sum becomes (n+1)r).
    pub fn to_orthogonal_offset(&self, lambda: &Weight, r: f64) -> Result<OrthPoint> {
        let ex = self.to_orthogonal_exact(lambda)?;
        let r = if self.family() == Family::A { r } else { 0.0 };
        Ok(OrthPoint::new(ex.iter().map(|c| c.to_f64().unwrap() + r).collect()))
    }

    /// Orthogonal images of the simple roots, exact.
    pub fn simple_roots_orth(&self) -> Result<Vec<Vec<Q>>> {
        let rows = self.orth("orthogonal coordinates")?;
        let d = self.orth_dim();
        let n = self.rank();
        Ok((0..n)
            .map(|i| {
                (0..d)
                    .map(|k| {
                        (0..n).fold(Q::zero(), |acc, j| {
                            acc + Q::from_integer(self.cartan[i][j]) * rows[j][k]
                        })
                    })
                    .collect()
            })
            .collect())
    }

    /// Weight from exact orthogonal coordinates: λ_i = 2(m·T(α_i)/scale)/⟨α_i,α_i⟩.
    pub fn from_orthogonal_exact(&self, m: &[Q]) -> Result<Weight> {
        check_len(self.orth_dim(), m.len())?;
        let roots = self.simple_roots_orth()?;
        let scale = self.orth_scale();
        Ok(Weight(
            roots
                .iter()
                .zip(&self.root_norms)
                .map(|(a, &nrm)| {
                    let dot = a.iter().zip(m).fold(Q::zero(), |acc, (x, y)| acc + x * y);
                    dot * 2 / scale / nrm
                })
                .collect(),
        ))
    }

    pub fn from_orthogonal(&self, p: &OrthPoint) -> Result<Vec<f64>> {
        check_len(self.orth_dim(), p.coords.len())?;
        let roots = self.simple_roots_orth()?;
        let scale = self.orth_scale().to_f64().unwrap();
        Ok(roots
            .iter()
            .zip(&self.root_norms)
            .map(|(a, nrm)| {
                let dot: f64 = a.iter().zip(&p.coords).map(|(x, y)| x.to_f64().unwrap() * y).sum();
                2.0 * dot / scale / nrm.to_f64().unwrap()
            })
            .collect())
    }

    /// Orthogonal coordinates of a point x (ω-coordinates) chosen so that
    /// ⟨λ, x⟩ = to_orthogonal(λ) · point_to_orthogonal(x).
    pub fn point_to_orthogonal(&self, x: &[f64]) -> Result<Vec<f64>> {
        let rows = self.orth("orthogonal coordinates")?;
        check_len(self.rank(), x.len())?;
        let scale = self.orth_scale().to_f64().unwrap();
        let d = self.orth_dim();
        let mut out = vec![0.0; d];
        for (c, row) in x.iter().zip(rows) {
            for k in 0..d {
                out[k] += c * row[k].to_f64().unwrap() / scale;
            }
        }
        Ok(out)
    }

    /// Inverse of `point_to_orthogonal`: x_i = 2·(x_orth·T(α_i))/⟨α_i,α_i⟩.
    pub fn point_from_orthogonal(&self, x_orth: &[f64]) -> Result<Vec<f64>> {
        check_len(self.orth_dim(), x_orth.len())?;
        let roots = self.simple_roots_orth()?;
        Ok(roots
            .iter()
            .zip(&self.root_norms)
            .map(|(a, nrm)| {
                let dot: f64 = a.iter().zip(x_orth).map(|(p, q)| p.to_f64().unwrap() * q).sum();
                2.0 * dot / nrm.to_f64().unwrap()
            })
            .collect())
    }
}
