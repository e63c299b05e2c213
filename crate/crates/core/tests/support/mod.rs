//! Independent oracles shared by the integration tests and the acceptance
//! suite. Nothing here calls into the library's linear algebra.
#![allow(dead_code)]

use ellsurf::kodaira::{ComponentShape, FiberModel};
use ellsurf::Rational;
use num::{One, Signed, Zero};
use rand::Rng;

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Determinant by cofactor-free elimination with exact pivots.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        d *= &a[col][col];
        for i in col + 1..n {
            let f = &a[i][col] / &a[col][col];
            for j in col..n {
                let v = &f * &a[col][j];
                a[i][j] -= v;
            }
        }
    }
    d
}

fn sub_gram(g: &[Vec<Rational>], s: &[usize]) -> Vec<Vec<Rational>> {
    s.iter().map(|&i| s.iter().map(|&j| g[i][j].clone()).collect()).collect()
}

/// Sylvester's criterion on `-G_S`: every leading principal minor positive.
pub fn negative_definite(g: &[Vec<Rational>], s: &[usize]) -> bool {
    let neg: Vec<Vec<Rational>> = sub_gram(g, s).into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect();
    (1..=s.len()).all(|k| {
        let lead: Vec<Vec<Rational>> = neg[..k].iter().map(|row| row[..k].to_vec()).collect();
        det(&lead).is_positive()
    })
}

/// Cramer's rule; `None` when singular.
pub fn cramer(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let d = det(a);
    if d.is_zero() {
        return None;
    }
    Some(
        (0..a.len())
            .map(|c| {
                let replaced: Vec<Vec<Rational>> = a
                    .iter()
                    .zip(b)
                    .map(|(row, bi)| {
                        let mut row = row.clone();
                        row[c] = bi.clone();
                        row
                    })
                    .collect();
                det(&replaced) / &d
            })
            .collect(),
    )
}

fn dot(g: &[Vec<Rational>], x: &[Rational], i: usize) -> Rational {
    g[i].iter().zip(x).map(|(a, b)| a * b).sum()
}

/// Zariski negative part by exhaustive search over supports: for each
/// negative definite `S`, solve `N·C_j = D·C_j` on `S` and keep `N` if it is
/// effective and `D - N` is nef. Returns the common `N` of all survivors
/// (asserting they agree), or `None` if no decomposition exists.
pub fn zariski_oracle(g: &[Vec<Rational>], d: &[Rational]) -> Option<Vec<Rational>> {
    let n = d.len();
    let mut found: Option<Vec<Rational>> = None;
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if !s.is_empty() && !negative_definite(g, &s) {
            continue;
        }
        let rhs: Vec<Rational> = s.iter().map(|&j| dot(g, d, j)).collect();
        let sol = if s.is_empty() { vec![] } else { cramer(&sub_gram(g, &s), &rhs)? };
        if sol.iter().any(Signed::is_negative) {
            continue;
        }
        let mut nvec = vec![Rational::zero(); n];
        for (&j, v) in s.iter().zip(sol) {
            nvec[j] = v;
        }
        let p: Vec<Rational> = d.iter().zip(&nvec).map(|(a, b)| a - b).collect();
        if (0..n).any(|i| dot(g, &p, i).is_negative()) {
            continue;
        }
        match &found {
            None => found = Some(nvec),
            Some(prev) => assert_eq!(prev, &nvec, "two distinct Zariski decompositions"),
        }
    }
    found
}

/// Random symmetric Gram matrix with off-diagonal entries in `[0, 4]` and
/// diagonal in `[-4, 4]`, and an effective divisor with coefficients in
/// `{0, 1/2, ..., 3}`.
pub fn random_zariski_input<R: Rng>(rng: &mut R, max_curves: usize) -> (Vec<Vec<i64>>, Vec<Rational>) {
    let n = rng.gen_range(1..=max_curves);
    let mut g = vec![vec![0i64; n]; n];
    for i in 0..n {
        g[i][i] = rng.gen_range(-4..=4);
        for j in i + 1..n {
            // sparse off-diagonal entries keep negative definite supports common
            let v = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..=4) };
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    let d = (0..n).map(|_| Rational::new(rng.gen_range(0..=6).into(), 2.into())).collect();
    (g, d)
}

/// Euler number of a fiber by inclusion–exclusion over its components:
/// smooth rational 2, elliptic 0, nodal rational 1, cuspidal rational 2,
/// minus `k - 1` at every point where `k ≥ 2` distinct components meet.
pub fn euler_oracle(m: &FiberModel) -> i64 {
    let components: i64 = m
        .shapes
        .iter()
        .map(|s| match s {
            ComponentShape::SmoothRational | ComponentShape::CuspidalRational => 2,
            ComponentShape::SmoothElliptic => 0,
            ComponentShape::NodalRational => 1,
        })
        .sum();
    let glue: i64 = m.znodes.iter().map(|z| z.components.len() as i64 - 1).sum();
    components - glue
}

/// Graded dimension of `F^{⊗i}` inside `C[u, v]`: the odd (even) forms of
/// every degree `≥ i` with the parity of `i`.
pub fn kummer_dim(i: u32, d: u32) -> usize {
    if d >= i && d % 2 == i % 2 {
        d as usize + 1
    } else {
        0
    }
}

/// Feasibility of `{A x = b, C x ≥ e, |x_k| ≤ bound}` by vertex enumeration:
/// the box makes the region a polytope, which is nonempty iff it has a
/// feasible vertex.
pub fn feasible_by_vertices(
    nvars: usize,
    eqs: &[(Vec<Rational>, Rational)],
    ges: &[(Vec<Rational>, Rational)],
    bound: i64,
) -> bool {
    let mut rows: Vec<(Vec<Rational>, Rational)> = eqs.iter().chain(ges).cloned().collect();
    for k in 0..nvars {
        let mut e = vec![Rational::zero(); nvars];
        e[k] = Rational::one();
        rows.push((e.clone(), r(-bound)));
        rows.push((e.into_iter().map(|x| -x).collect(), r(-bound)));
    }
    let ok = |x: &[Rational]| {
        eqs.iter().all(|(a, b)| &dot_vec(a, x) == b)
            && ges.iter().all(|(a, b)| &dot_vec(a, x) >= b)
            && x.iter().all(|v| v.abs() <= r(bound))
    };
    subsets(rows.len(), nvars).into_iter().any(|pick| {
        let a: Vec<Vec<Rational>> = pick.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Rational> = pick.iter().map(|&i| rows[i].1.clone()).collect();
        cramer(&a, &b).is_some_and(|x| ok(&x))
    })
}

pub fn dot_vec(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub mod local {
    //! Graded comparison of the blow-up holomorphy test with divisibility by
    //! powers of `M`.

    use std::collections::BTreeMap;

    use ellsurf::linalg::{nullspace, rank};
    use ellsurf::symdiff::{
        blowup_holomorphy, m_divide, obstruction_profile, pullback, Chart, ChartExponents, LocalDifferential, MForm,
    };
    use ellsurf::Rational;
    use num::{One, Zero};
    use rand::Rng;

    type Mono = (u32, u32, u32);

    fn monomials(n: u32, i: u32) -> Vec<Mono> {
        (0..=n).flat_map(|a| (0..=i).map(move |l| (a, n - a, l))).collect()
    }

    fn combine(basis: &[Mono], v: &[Rational], i: u32) -> LocalDifferential {
        let mut w = LocalDifferential::zero(i);
        for (&(a, b, l), c) in basis.iter().zip(v) {
            w.add_term(a, b, l, c.clone());
        }
        w
    }

    fn coords(basis: &[Mono], w: &LocalDifferential) -> Vec<Rational> {
        basis.iter().map(|k| w.terms().get(k).cloned().unwrap_or_else(Rational::zero)).collect()
    }

    /// The right-hand side of the equivalence for one graded piece.
    pub fn factors_through_m(w: &LocalDifferential, n: u32) -> bool {
        let i = w.degree();
        n >= i || m_divide(w, (i - n) / 2).is_some_and(|eta| eta.mul(&MForm.power((i - n) / 2)) == *w)
    }

    /// The full right-hand side: every graded part has `n ≥ n_min`, the
    /// parity of `i`, and factors through `M^{(i-n)/2}` when `n < i`.
    pub fn rhs(w: &LocalDifferential, j: u32) -> bool {
        let i = w.degree();
        let (n_min, parity) = obstruction_profile(i, j);
        w.graded_parts().iter().all(|(&n, part)| n >= n_min && n % 2 == parity && factors_through_m(part, n))
    }

    #[derive(Debug, Default)]
    pub struct Summary {
        pub pieces: usize,
        pub combinations: usize,
    }

    /// For every graded piece admitted by twist `j`, the subspace passing
    /// [`blowup_holomorphy`] equals `M^t · (degree n - t forms)`; then the
    /// predicates are compared on basis vectors and sampled `{-1, 0, 1}`
    /// combinations, including mixed degrees.
    pub fn check<R: Rng>(i: u32, j: u32, samples: usize, rng: &mut R) -> Result<Summary, String> {
        let (n_min, _) = obstruction_profile(i, j);
        let mut summary = Summary::default();
        let degrees: Vec<u32> = (n_min..=i + 2).step_by(2).collect();
        for &n in &degrees {
            let basis = monomials(n, i);
            let cols = basis.len();
            let mut rows: BTreeMap<(u8, ChartExponents), Vec<Rational>> = BTreeMap::new();
            for (col, &(a, b, l)) in basis.iter().enumerate() {
                let w = LocalDifferential::monomial(Rational::one(), a, b, l, i);
                for (tag, chart) in [(0u8, Chart::A), (1u8, Chart::B)] {
                    let form = pullback(&w, chart).map_err(|e| e.to_string())?;
                    for (&key, c) in form.pole_terms() {
                        rows.entry((tag, key)).or_insert_with(|| vec![Rational::zero(); cols])[col] = c.clone();
                    }
                }
            }
            let rows: Vec<Vec<Rational>> = rows.into_values().collect();
            let holomorphic = nullspace(&rows, cols);
            let divisible: Vec<Vec<Rational>> = if n >= i {
                (0..cols)
                    .map(|c| (0..cols).map(|k| if k == c { Rational::one() } else { Rational::zero() }).collect())
                    .collect()
            } else {
                let t = (i - n) / 2;
                if n < t {
                    vec![]
                } else {
                    let mt = MForm.power(t);
                    monomials(n - t, i - t)
                        .into_iter()
                        .map(|(a, b, l)| {
                            coords(&basis, &LocalDifferential::monomial(Rational::one(), a, b, l, i - t).mul(&mt))
                        })
                        .collect()
                }
            };
            let (rh, rd) = (rank(&holomorphic), rank(&divisible));
            let joint = rank(&holomorphic.iter().chain(&divisible).cloned().collect::<Vec<_>>());
            if rh != rd || rh != joint {
                return Err(format!("i={i} j={j} n={n}: holomorphic rank {rh}, M-multiples rank {rd}, joint {joint}"));
            }
            for v in holomorphic.iter() {
                let w = combine(&basis, v, i);
                if !blowup_holomorphy(&w).map_err(|e| e.to_string())? || !factors_through_m(&w, n) {
                    return Err(format!("i={i} j={j} n={n}: kernel vector {w} disagrees"));
                }
            }
            for (k, &(a, b, l)) in basis.iter().enumerate() {
                let w = LocalDifferential::monomial(Rational::one(), a, b, l, i);
                if blowup_holomorphy(&w).map_err(|e| e.to_string())? != factors_through_m(&w, n) {
                    return Err(format!("i={i} j={j} n={n}: basis monomial {k} ({w}) disagrees"));
                }
            }
            summary.pieces += 1;
        }
        // sampled combinations across all admitted degrees
        let all: Vec<Mono> = degrees.iter().flat_map(|&n| monomials(n, i)).collect();
        for _ in 0..samples {
            let sparse = rng.gen_range(1..=4);
            let mut w = LocalDifferential::zero(i);
            for _ in 0..sparse {
                let (a, b, l) = all[rng.gen_range(0..all.len())];
                let c = if rng.gen_bool(0.5) { Rational::one() } else { -Rational::one() };
                w.add_term(a, b, l, c);
            }
            // also mix in a holomorphic M-multiple so the positive side is exercised
            if rng.gen_bool(0.5) && i >= 1 {
                let t = rng.gen_range(1..=i.min(3));
                let eta_deg = rng.gen_range(0..=2u32);
                let eta_l = rng.gen_range(0..=i - t);
                let n = eta_deg + t;
                if n >= n_min && (n + i).is_multiple_of(2) {
                    let a = rng.gen_range(0..=eta_deg);
                    let eta = LocalDifferential::monomial(Rational::one(), a, eta_deg - a, eta_l, i - t);
                    w = w.add(&eta.mul(&MForm.power(t)));
                }
            }
            let lhs = blowup_holomorphy(&w).map_err(|e| e.to_string())?;
            if lhs != rhs(&w, j) {
                return Err(format!("i={i} j={j}: {w}: holomorphic {lhs}, factorization {}", !lhs));
            }
            summary.combinations += 1;
        }
        Ok(summary)
    }
}
