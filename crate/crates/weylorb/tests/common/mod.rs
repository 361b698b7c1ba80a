//! Test-side oracle: root data rebuilt from orthogonal simple roots, the Weyl
//! group by brute-force closure, orbit sums term by term, and hand-entered
//! signed-orbit tables. Nothing here calls into the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weylorb::Q;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unit(d: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Simple roots of a diagram in an orthonormal frame.
pub fn simple_roots_orth(label: &str) -> Vec<Vec<i64>> {
    let family = &label[..1];
    let n: usize = label[1..].parse().expect("rank");
    if family == "G" {
        return vec![vec![-2, 1, 1], vec![1, -1, 0]];
    }
    let d = if family == "A" { n + 1 } else { n };
    let chain = |k: usize| -> Vec<Vec<i64>> { (0..k).map(|i| sub(&unit(d, i), &unit(d, i + 1))).collect() };
    match family {
        "A" => chain(n),
        "B" => {
            let mut r = chain(n - 1);
            r.push(unit(d, n - 1));
            r
        }
        "C" => {
            let mut r = chain(n - 1);
            r.push(unit(d, n - 1).iter().map(|v| 2 * v).collect());
            r
        }
        "D" => {
            let mut r = chain(n - 1);
            let mut last = unit(d, n - 2);
            last[n - 1] = 1;
            r.push(last);
            r
        }
        _ => panic!("no oracle for {label}"),
    }
}

pub fn weyl_order_formula(label: &str) -> u64 {
    let n: u64 = label[1..].parse().unwrap();
    let fact: u64 = (1..=n).product();
    match &label[..1] {
        "A" => fact * (n + 1),
        "B" | "C" => fact << n,
        "D" => fact << (n - 1),
        "G" => 12,
        _ => panic!("no order formula for {label}"),
    }
}

pub fn q_inverse(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular");
        a.swap(col, piv);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(pivot_row) {
                    *v -= f * pv;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Group element acting on ω-coordinates, with its determinant.
#[derive(Clone, Debug)]
pub struct Elem {
    pub mat: Vec<Vec<i64>>,
    pub det: i8,
}

impl Elem {
    pub fn act(&self, x: &[i64]) -> Vec<i64> {
        self.mat.iter().map(|row| dot(row, x)).collect()
    }

    pub fn act_f(&self, x: &[f64]) -> Vec<f64> {
        self.mat
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| *a as f64 * b).sum())
            .collect()
    }
}

pub struct Oracle {
    pub label: String,
    pub rank: usize,
    pub orth: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
    pub cartan_inv: Vec<Vec<Q>>,
    /// ⟨α_i,α_i⟩ with long roots of norm 2.
    pub norms: Vec<Q>,
    /// ⟨x,y⟩ = x·S·y on ω-coordinates.
    pub metric: Vec<Vec<Q>>,
    metric_f: Vec<Vec<f64>>,
    /// Squared length of a long root in the orthogonal frame, halved.
    pub kappa: i64,
    pub group: Vec<Elem>,
    /// Positive roots in ω-coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub marks: Vec<i64>,
}

impl Oracle {
    pub fn new(label: &str) -> Self {
        let orth = simple_roots_orth(label);
        let n = orth.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|j| (0..n).map(|k| 2 * dot(&orth[j], &orth[k]) / dot(&orth[k], &orth[k])).collect())
            .collect();
        let long = orth.iter().map(|a| dot(a, a)).max().unwrap();
        let norms: Vec<Q> = orth.iter().map(|a| Q::new(2 * dot(a, a), long)).collect();
        let cq: Vec<Vec<Q>> = cartan.iter().map(|r| r.iter().map(|&v| Q::from_integer(v)).collect()).collect();
        let cartan_inv = q_inverse(&cq);
        let metric: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| cartan_inv[i][j] * norms[j] / 2).collect())
            .collect();
        let metric_f = metric.iter().map(|r| r.iter().map(|v| v.to_f64().unwrap()).collect()).collect();

        let gens: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| i64::from(j == k) - if k == i { cartan[i][j] } else { 0 }).collect())
                    .collect()
            })
            .collect();
        let id: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        let mut seen: HashMap<Vec<Vec<i64>>, i8> = HashMap::from([(id.clone(), 1)]);
        let mut group = vec![Elem { mat: id.clone(), det: 1 }];
        let mut queue = VecDeque::from([0usize]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let cur = &group[p].mat;
                let prod: Vec<Vec<i64>> = (0..n)
                    .map(|i| (0..n).map(|j| (0..n).map(|k| g[i][k] * cur[k][j]).sum()).collect())
                    .collect();
                if !seen.contains_key(&prod) {
                    let det = -group[p].det;
                    seen.insert(prod.clone(), det);
                    group.push(Elem { mat: prod, det });
                    queue.push_back(group.len() - 1);
                }
            }
        }

        let to_alpha = |r: &[i64]| -> Vec<Q> {
            (0..n)
                .map(|j| (0..n).fold(Q::zero(), |acc, i| acc + Q::from_integer(r[i]) * cartan_inv[i][j]))
                .collect()
        };
        let mut roots: Vec<Vec<i64>> = Vec::new();
        for row in &cartan {
            for w in &group {
                let r = w.act(row);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        let positive_roots: Vec<Vec<i64>> =
            roots.into_iter().filter(|r| to_alpha(r).iter().all(|c| !c.is_negative())).collect();
        let height = |r: &Vec<i64>| to_alpha(r).iter().fold(Q::zero(), |a, b| a + b);
        let highest_root = positive_roots.iter().max_by_key(|r| height(r)).unwrap().clone();
        let marks = to_alpha(&highest_root).iter().map(|c| c.to_integer()).collect();
        Oracle {
            label: label.to_string(),
            rank: n,
            orth,
            cartan,
            cartan_inv,
            norms,
            metric,
            metric_f,
            kappa: long / 2,
            group,
            positive_roots,
            highest_root,
            marks,
        }
    }

    pub fn inner(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] * self.metric_f[i][j] * y[j];
            }
        }
        s
    }

    pub fn inner_q(&self, x: &[Q], y: &[Q]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] * self.metric[i][j] * y[j];
            }
        }
        s
    }

    pub fn reflect(&self, i: usize, x: &[i64]) -> Vec<i64> {
        x.iter().zip(&self.cartan[i]).map(|(v, m)| v - x[i] * m).collect()
    }

    pub fn reflect_f(&self, i: usize, x: &[f64]) -> Vec<f64> {
        x.iter().zip(&self.cartan[i]).map(|(v, m)| v - x[i] * *m as f64).collect()
    }

    /// Coroot α_i^∨ = 2α_i/⟨α_i,α_i⟩ in ω-coordinates.
    pub fn coroot(&self, i: usize) -> Vec<f64> {
        let s = 2.0 / self.norms[i].to_f64().unwrap();
        self.cartan[i].iter().map(|&v| v as f64 * s).collect()
    }

    /// r_0 x = x − (⟨x,ξ⟩ − 1)ξ, reflection in the hyperplane ⟨x,ξ⟩ = 1.
    pub fn affine_r0(&self, x: &[f64]) -> Vec<f64> {
        let xi: Vec<f64> = self.highest_root.iter().map(|&v| v as f64).collect();
        let c = self.inner(x, &xi) - 1.0;
        x.iter().zip(&xi).map(|(a, b)| a - c * b).collect()
    }

    pub fn pair_highest(&self, x: &[f64]) -> f64 {
        let xi: Vec<f64> = self.highest_root.iter().map(|&v| v as f64).collect();
        self.inner(x, &xi)
    }

    /// Σ_w det(w) e^{2πi⟨wλ,x⟩}.
    pub fn anti(&self, lambda: &[f64], x: &[f64]) -> C64 {
        self.group
            .iter()
            .map(|w| C64::from_polar(1.0, 2.0 * PI * self.inner(&w.act_f(lambda), x)) * w.det as f64)
            .sum()
    }

    /// Σ over the orbit of λ of e^{2πi⟨μ,x⟩}.
    pub fn sym(&self, lambda: &[f64], x: &[f64]) -> C64 {
        let stab = self
            .group
            .iter()
            .filter(|w| w.act_f(lambda).iter().zip(lambda).all(|(a, b)| (a - b).abs() < 1e-9))
            .count() as f64;
        let full: C64 =
            self.group.iter().map(|w| C64::from_polar(1.0, 2.0 * PI * self.inner(&w.act_f(lambda), x))).sum();
        full / stab
    }

    pub fn orbit(&self, lambda: &[i64]) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        for w in &self.group {
            let p = w.act(lambda);
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Dominant representative with sign, or None on a wall.
    pub fn dominant_with_sign(&self, v: &[i64]) -> Option<(Vec<i64>, i64)> {
        let mut v = v.to_vec();
        let mut sign = 1;
        while let Some(i) = v.iter().position(|&c| c < 0) {
            v = self.reflect(i, &v);
            sign = -sign;
        }
        if v.iter().any(|&c| c == 0) {
            None
        } else {
            Some((v, sign))
        }
    }

    /// Expansion of O(ν)·O^±(μ) in signed orbits, by brute force.
    pub fn plain_signed_product(&self, nu: &[i64], mu: &[i64]) -> BTreeMap<Vec<i64>, i64> {
        let mut out = BTreeMap::new();
        for p in self.orbit(nu) {
            let s: Vec<i64> = mu.iter().zip(&p).map(|(a, b)| a + b).collect();
            if let Some((d, sign)) = self.dominant_with_sign(&s) {
                *out.entry(d).or_insert(0) += sign;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Weyl dimension Π ⟨λ+ρ,α⟩/⟨ρ,α⟩.
    pub fn dimension(&self, lambda: &[i64]) -> u64 {
        let rho = vec![Q::one(); self.rank];
        let shifted: Vec<Q> = lambda.iter().map(|&v| Q::from_integer(v + 1)).collect();
        let mut prod = Q::one();
        for a in &self.positive_roots {
            let aq: Vec<Q> = a.iter().map(|&v| Q::from_integer(v)).collect();
            prod *= self.inner_q(&shifted, &aq) / self.inner_q(&rho, &aq);
        }
        assert!(prod.is_integer());
        prod.to_integer() as u64
    }

    /// Orthogonal image of ω_i: Σ_j (M⁻¹)_ij α_j.
    fn omega_orth(&self, i: usize) -> Vec<Q> {
        let d = self.orth[0].len();
        (0..d)
            .map(|k| (0..self.rank).fold(Q::zero(), |acc, j| acc + self.cartan_inv[i][j] * self.orth[j][k]))
            .collect()
    }

    pub fn weight_to_orth(&self, lambda: &[Q]) -> Vec<Q> {
        let d = self.orth[0].len();
        let mut out = vec![Q::zero(); d];
        for (i, c) in lambda.iter().enumerate() {
            for (o, w) in out.iter_mut().zip(self.omega_orth(i)) {
                *o += *c * w;
            }
        }
        out
    }

    /// Orthogonal coordinates of a point, scaled so that the plain dot
    /// product with `weight_to_orth` is ⟨λ,x⟩.
    pub fn point_to_orth(&self, x: &[f64]) -> Vec<f64> {
        let d = self.orth[0].len();
        let mut out = vec![0.0; d];
        for (i, c) in x.iter().enumerate() {
            for (o, w) in out.iter_mut().zip(self.omega_orth(i)) {
                *o += c * w.to_f64().unwrap() / self.kappa as f64;
            }
        }
        out
    }

    /// Uniform point of the open fundamental domain, barycentric
    /// coordinates at least `margin`.
    pub fn random_interior(&self, rng: &mut impl Rng, margin: f64) -> Vec<f64> {
        let n = self.rank;
        loop {
            let e: Vec<f64> = (0..=n).map(|_| -rng.gen::<f64>().max(1e-300).ln()).collect();
            let total: f64 = e.iter().sum();
            if e.iter().any(|v| v / total < margin) {
                continue;
            }
            return (0..n)
                .map(|i| e[i + 1] / total / self.marks[i] as f64 * 2.0 / self.norms[i].to_f64().unwrap())
                .collect();
        }
    }
}

pub fn random_box(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn random_strict(n: usize, rng: &mut impl Rng, max: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(1..=max)).collect()
}

pub fn to_f(v: &[i64]) -> Vec<f64> {
    v.iter().map(|&c| c as f64).collect()
}

pub fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// All permutations of 0..n with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    if n == 0 {
        return vec![(vec![], 1.0)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let moved = (p.len() - pos) as i32;
            out.push((q, s * (-1f64).powi(moved)));
        }
    }
    out
}

pub fn det_perm(a: &[Vec<C64>], anti: bool) -> C64 {
    let n = a.len();
    permutations(n)
        .iter()
        .map(|(p, s)| {
            let prod: C64 = (0..n).map(|i| a[i][p[i]]).product();
            if anti {
                prod * *s
            } else {
                prod
            }
        })
        .sum()
}

type Table = Vec<(Vec<i64>, i8)>;

fn with_negatives(base: Table, flip_sign: bool) -> Table {
    let mut out = base.clone();
    for (p, s) in base {
        out.push((p.iter().map(|v| -v).collect(), if flip_sign { -s } else { s }));
    }
    out
}

pub fn table_a1(a: i64) -> Table {
    vec![(vec![a], 1), (vec![-a], -1)]
}

pub fn table_a1a1(a: i64, b: i64) -> Table {
    vec![(vec![a, b], 1), (vec![-a, b], -1), (vec![a, -b], -1), (vec![-a, -b], 1)]
}

pub fn table_a2(a: i64, b: i64) -> Table {
    vec![
        (vec![a, b], 1),
        (vec![-a, a + b], -1),
        (vec![a + b, -b], -1),
        (vec![-b, -a], -1),
        (vec![-a - b, a], 1),
        (vec![b, -a - b], 1),
    ]
}

pub fn table_c2(a: i64, b: i64) -> Table {
    vec![
        (vec![a, b], 1),
        (vec![-a, a + b], -1),
        (vec![a + 2 * b, -b], -1),
        (vec![a + 2 * b, -a - b], 1),
        (vec![-a, -b], 1),
        (vec![a, -a - b], -1),
        (vec![-a - 2 * b, b], -1),
        (vec![-a - 2 * b, a + b], 1),
    ]
}

pub fn table_g2(a: i64, b: i64) -> Table {
    with_negatives(
        vec![
            (vec![a, b], 1),
            (vec![-a, 3 * a + b], -1),
            (vec![a + b, -b], -1),
            (vec![2 * a + b, -3 * a - b], 1),
            (vec![-a - b, 3 * a + 2 * b], 1),
            (vec![-2 * a - b, 3 * a + 2 * b], -1),
        ],
        false,
    )
}

pub fn table_a3(a: i64, b: i64, c: i64) -> Table {
    let base: Table = vec![
        (vec![a, b, c], 1),
        (vec![a + b, -b, b + c], -1),
        (vec![a + b, c, -b - c], 1),
        (vec![a, b + c, -c], -1),
        (vec![a + b + c, -c, -b], -1),
        (vec![a + b + c, -b - c, b], 1),
        (vec![-a, a + b, c], -1),
        (vec![-a, a + b + c, -c], 1),
        (vec![b, -a - b, a + b + c], 1),
        (vec![b + c, -a - b - c, a + b], -1),
        (vec![-a - b, a, b + c], 1),
        (vec![-b, -a, a + b + c], -1),
    ];
    let mut out = base.clone();
    for (p, s) in base {
        out.push((vec![-p[2], -p[1], -p[0]], s));
    }
    out
}

pub fn table_b3(a: i64, b: i64, c: i64) -> Table {
    with_negatives(
        vec![
            (vec![a, b, c], 1),
            (vec![a + b, -b, 2 * b + c], -1),
            (vec![-a, a + b, c], -1),
            (vec![b, -a - b, 2 * a + 2 * b + c], 1),
            (vec![-a - b, a, 2 * b + c], 1),
            (vec![-b, -a, 2 * a + 2 * b + c], -1),
            (vec![a, b + c, -c], -1),
            (vec![a + b + c, -b - c, 2 * b + c], 1),
            (vec![-a, a + b + c, -c], 1),
            (vec![b + c, -a - b - c, 2 * a + 2 * b + c], -1),
            (vec![-a - b - c, a, 2 * b + c], -1),
            (vec![-b - c, -a, 2 * a + 2 * b + c], 1),
            (vec![-a - 2 * b - c, b, c], -1),
            (vec![-a - b - c, -b, 2 * b + c], 1),
            (vec![a + 2 * b + c, -a - b - c, c], 1),
            (vec![b, a + b + c, -2 * a - 2 * b - c], -1),
            (vec![a + b + c, -a - 2 * b - c, 2 * b + c], -1),
            (vec![-b, a + 2 * b + c, -2 * a - 2 * b - c], 1),
            (vec![-a - 2 * b - c, b + c, -c], 1),
            (vec![-a - b, -b - c, 2 * b + c], -1),
            (vec![a + 2 * b + c, -a - b, -c], -1),
            (vec![b + c, a + b, -2 * a - 2 * b - c], 1),
            (vec![a + b, -a - 2 * b - c, 2 * b + c], 1),
            (vec![-b - c, a + 2 * b + c, -2 * a - 2 * b - c], -1),
        ],
        true,
    )
}

pub fn table_c3(a: i64, b: i64, c: i64) -> Table {
    with_negatives(
        vec![
            (vec![a, b, c], 1),
            (vec![a + b, -b, b + c], -1),
            (vec![-a, a + b, c], -1),
            (vec![b, -a - b, a + b + c], 1),
            (vec![-a - b, a, b + c], 1),
            (vec![-b, -a, a + b + c], -1),
            (vec![a, b + 2 * c, -c], -1),
            (vec![a + b + 2 * c, -b - 2 * c, b + c], 1),
            (vec![-a, a + b + 2 * c, -c], 1),
            (vec![b + 2 * c, -a - b - 2 * c, a + b + c], -1),
            (vec![-a - b - 2 * c, a, b + c], -1),
            (vec![-b - 2 * c, -a, a + b + c], 1),
            (vec![-a - 2 * b - 2 * c, b, c], -1),
            (vec![-a - b - 2 * c, -b, b + c], 1),
            (vec![a + 2 * b + 2 * c, -a - b - 2 * c, c], 1),
            (vec![b, a + b + 2 * c, -a - b - c], -1),
            (vec![a + b + 2 * c, -a - 2 * b - 2 * c, b + c], -1),
            (vec![-b, a + 2 * b + 2 * c, -a - b - c], 1),
            (vec![-a - 2 * b - 2 * c, b + 2 * c, -c], 1),
            (vec![-a - b, -b - 2 * c, b + c], -1),
            (vec![a + 2 * b + 2 * c, -a - b, -c], -1),
            (vec![b + 2 * c, a + b, -a - b - c], 1),
            (vec![a + b, -a - 2 * b - 2 * c, b + c], 1),
            (vec![-b - 2 * c, a + 2 * b + 2 * c, -a - b - c], -1),
        ],
        true,
    )
}
