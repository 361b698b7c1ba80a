//! Weyl group generation, reflections with sign tracking, orbits, the affine
//! reflection r_0 and fundamental domain membership.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{One, Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::linalg::Q;
use crate::rootsys::{Family, RootSystem, Weight, DEFAULT_GROUP_LIMIT};

/// Integer matrix acting on ω-coordinates (column vectors), with its
/// determinant and a shortest generating word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    n: usize,
    matrix: Vec<i64>,
    det: i8,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        WeylElement { n, matrix, det: 1, word: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn det(&self) -> i8 {
        self.det
    }

    /// Generator indices, applied right to left: w = r_{word[0]} ⋯ r_{word[k]}.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.matrix[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == WeylElement::identity(self.n).matrix
    }

    pub fn act(&self, x: &Weight) -> Weight {
        let n = self.n;
        Weight(
            (0..n)
                .map(|k| {
                    (0..n).fold(Q::zero(), |acc, j| {
                        let m = self.matrix[k * n + j];
                        if m == 0 {
                            acc
                        } else {
                            acc + x.0[j] * m
                        }
                    })
                })
                .collect(),
        )
    }

    pub fn act_f64(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|k| (0..n).map(|j| self.matrix[k * n + j] as f64 * x[j]).sum())
            .collect()
    }

    /// Transpose action, used to move a linear functional: (wᵀ y)·x = y·(w x).
    pub fn act_transpose_f64(&self, y: &[f64]) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).map(|k| self.matrix[k * n + j] as f64 * y[k]).sum())
            .collect()
    }

    /// self ∘ other.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i * n + k];
                if a != 0 {
                    for j in 0..n {
                        matrix[i * n + j] += a * other.matrix[k * n + j];
                    }
                }
            }
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { n, matrix, det: self.det * other.det, word }
    }

    pub fn matrix_key(&self) -> &[i64] {
        &self.matrix
    }
}

/// Simple reflection r_i on ω-coordinates: (r_i x)_k = x_k − M_ik x_i.
pub fn generator(rs: &RootSystem, i: usize) -> WeylElement {
    let n = rs.rank();
    let mut e = WeylElement::identity(n);
    for k in 0..n {
        e.matrix[k * n + i] -= rs.cartan()[i][k];
    }
    e.det = -1;
    e.word = vec![i];
    e
}

pub fn generators(rs: &RootSystem) -> Vec<WeylElement> {
    (0..rs.rank()).map(|i| generator(rs, i)).collect()
}

/// Apply r_i to a weight in place.
pub fn reflect_in_place(rs: &RootSystem, i: usize, x: &mut [Q]) {
    let xi = x[i];
    for (k, xk) in x.iter_mut().enumerate() {
        let m = rs.cartan()[i][k];
        if m != 0 {
            *xk -= xi * m;
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
}

impl WeylGroup {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.matrix).copied()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.index.contains_key(&w.matrix)
    }

    /// An element of maximal word length.
    pub fn longest(&self) -> &WeylElement {
        self.elements.iter().max_by_key(|w| w.word.len()).unwrap()
    }
}

/// Enumerate W by breadth-first search over left multiplication by
/// generators. Words are shortest, so det = (−1)^(word length).
pub fn generate_group(rs: &RootSystem, limit: u64) -> Result<WeylGroup> {
    if matches!(rs.family(), Family::E | Family::F) {
        return Err(Error::Unsupported { op: "group enumeration", diagram: rs.id().to_string() });
    }
    if rs.weyl_order() > limit {
        return Err(Error::GroupTooLarge { order: rs.weyl_order(), limit });
    }
    let n = rs.rank();
    let gens = generators(rs);
    let id = WeylElement::identity(n);
    let mut index = HashMap::new();
    index.insert(id.matrix.clone(), 0);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(pos) = queue.pop_front() {
        for g in &gens {
            let next = g.compose(&elements[pos]);
            if !index.contains_key(&next.matrix) {
                index.insert(next.matrix.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    if elements.len() as u64 != rs.weyl_order() {
        return Err(Error::Internal(format!(
            "generated {} elements, expected {}",
            elements.len(),
            rs.weyl_order()
        )));
    }
    Ok(WeylGroup { elements, index })
}

impl RootSystem {
    /// The Weyl group, generated once and cached.
    pub fn weyl_group(&self) -> Result<&WeylGroup> {
        self.group_cache()
            .get_or_init(|| generate_group(self, DEFAULT_GROUP_LIMIT))
            .as_ref()
            .map_err(Clone::clone)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantForm {
    pub weight: Weight,
    pub sign: i8,
    pub on_wall: bool,
}

/// Map x to the dominant chamber by repeatedly reflecting the most negative
/// coordinate (lowest index on ties); the sign is det of the mapping element.
pub fn to_dominant(rs: &RootSystem, x: &Weight) -> Result<DominantForm> {
    check_len(rs.rank(), x.len())?;
    let mut v = x.0.clone();
    let mut sign = 1i8;
    loop {
        let mut best: Option<usize> = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_negative() && best.map_or(true, |b| *c < v[b]) {
                best = Some(i);
            }
        }
        match best {
            Some(i) => {
                reflect_in_place(rs, i, &mut v);
                sign = -sign;
            }
            None => break,
        }
    }
    let on_wall = v.iter().any(Zero::is_zero);
    Ok(DominantForm { weight: Weight(v), sign, on_wall })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedOrbit {
    pub dominant: Weight,
    pub points: Vec<(Weight, i8)>,
}

impl SignedOrbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn sign_of(&self, p: &Weight) -> Option<i8> {
        self.points.iter().find(|(q, _)| q == p).map(|(_, s)| *s)
    }
}

pub fn signed_orbit(rs: &RootSystem, lambda: &Weight) -> Result<SignedOrbit> {
    check_len(rs.rank(), lambda.len())?;
    if !lambda.is_strictly_dominant() {
        return Err(Error::NotStrictlyDominant(lambda.to_string()));
    }
    let g = rs.weyl_group()?;
    Ok(SignedOrbit {
        dominant: lambda.clone(),
        points: g.elements().iter().map(|w| (w.act(lambda), w.det())).collect(),
    })
}

/// W-orbit of a dominant weight, by search over generator images.
pub fn orbit(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    check_len(rs.rank(), lambda.len())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut out = vec![lambda.clone()];
    let mut pos = 0;
    while pos < out.len() {
        for i in 0..rs.rank() {
            if out[pos].0[i].is_zero() {
                continue;
            }
            let mut v = out[pos].0.clone();
            reflect_in_place(rs, i, &mut v);
            let w = Weight(v);
            if seen.insert(w.clone()) {
                out.push(w);
            }
        }
        pos += 1;
    }
    Ok(out)
}

pub fn stabilizer(rs: &RootSystem, lambda: &Weight) -> Result<Vec<WeylElement>> {
    check_len(rs.rank(), lambda.len())?;
    let g = rs.weyl_group()?;
    Ok(g.elements().iter().filter(|w| w.act(lambda) == *lambda).cloned().collect())
}

/// |W_λ| for a dominant λ: the Weyl order divided by the orbit size.
pub fn stabilizer_order(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    Ok(rs.weyl_order() / orbit(rs, lambda)?.len() as u64)
}

/// r_0 x = ξ^∨ + r_ξ x = x + (1 − ⟨x,ξ⟩)ξ.
pub fn affine_r0(rs: &RootSystem, x: &Weight) -> Result<Weight> {
    check_len(rs.rank(), x.len())?;
    let xi = rs.highest_root();
    let c = Q::one() - rs.pair_highest_root(x);
    Ok(Weight(x.0.iter().zip(&xi.0).map(|(a, b)| a + c * b).collect()))
}

pub fn affine_r0_f64(rs: &RootSystem, x: &[f64]) -> Vec<f64> {
    let xi = rs.highest_root().to_f64();
    let c = 1.0 - rs.pair_highest_root_f64(x);
    x.iter().zip(&xi).map(|(a, b)| a + c * b).collect()
}

/// Reflection r_ξ in the highest root.
pub fn reflect_highest(rs: &RootSystem, x: &Weight) -> Weight {
    let xi = rs.highest_root();
    let c = rs.pair_highest_root(x);
    Weight(x.0.iter().zip(&xi.0).map(|(a, b)| a - c * b).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Interior,
    Boundary,
    Outside,
}

pub fn in_fundamental_domain(rs: &RootSystem, x: &Weight) -> Result<Region> {
    check_len(rs.rank(), x.len())?;
    let h = rs.pair_highest_root(x);
    if x.0.iter().any(Signed::is_negative) || h > Q::one() {
        Ok(Region::Outside)
    } else if x.0.iter().any(Zero::is_zero) || h == Q::one() {
        Ok(Region::Boundary)
    } else {
        Ok(Region::Interior)
    }
}

/// Floating-point membership with tolerance `tol` on each constraint.
pub fn in_fundamental_domain_f64(rs: &RootSystem, x: &[f64], tol: f64) -> Region {
    let h = rs.pair_highest_root_f64(x);
    if x.iter().any(|&c| c < -tol) || h > 1.0 + tol {
        Region::Outside
    } else if x.iter().any(|&c| c.abs() <= tol) || (h - 1.0).abs() <= tol {
        Region::Boundary
    } else {
        Region::Interior
    }
}

/// Matrix of w in orthogonal coordinates (columns are images of e_k).
/// For A_n this is the permutation matrix on n+1 coordinates.
pub fn orth_matrix(rs: &RootSystem, w: &WeylElement) -> Result<Vec<Vec<Q>>> {
    let d = rs.orth_dim();
    let is_a = rs.family() == Family::A;
    let shift = Q::new(1, d as i64);
    let mut cols = Vec::with_capacity(d);
    for k in 0..d {
        let mut e: Vec<Q> = (0..d).map(|j| if j == k { Q::one() } else { Q::zero() }).collect();
        if is_a {
            e.iter_mut().for_each(|c| *c -= shift);
        }
        let lambda = rs.from_orthogonal_exact(&e)?;
        let mut img = rs.to_orthogonal_exact(&w.act(&lambda))?;
        if is_a {
            img.iter_mut().for_each(|c| *c += shift);
        }
        cols.push(img);
    }
    Ok((0..d).map(|r| (0..d).map(|c| cols[c][r]).collect()).collect())
}
