//! Tensor powers of the module `F` of odd polynomials over the `A₁` ring
//! `C[u², uv, v²]`, identified with their images in `C[u, v]`.

use std::collections::BTreeSet;

use serde::Serialize;

/// `F^{⊗i}` is `I^e` (`Trivial`) or `I^e ⊗ F` (`F`), `I` the maximal ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Residual {
    Trivial,
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KummerTag {
    pub ideal_exponent: u32,
    pub residual: Residual,
}

type Monomials = BTreeSet<(u32, u32)>;

fn monomials_of_degree(d: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=d).map(move |a| (a, d - a))
}

/// Monomials of the image of `F^{⊗i}` in `C[u, v]` up to degree `max_deg`,
/// by multiplying generators of `F` (the odd monomials).
pub fn tensor_power_image(i: u32, max_deg: u32) -> Monomials {
    if i == 0 {
        // the empty tensor product is the ring of even polynomials
        return candidate_image(KummerTag { ideal_exponent: 0, residual: Residual::Trivial }, max_deg);
    }
    let gens: Vec<(u32, u32)> = (1..=max_deg).step_by(2).flat_map(monomials_of_degree).collect();
    let mut cur: Monomials = [(0, 0)].into();
    for _ in 0..i {
        let mut next = Monomials::new();
        for &(a, b) in &cur {
            for &(c, d) in &gens {
                if a + b + c + d <= max_deg {
                    next.insert((a + c, b + d));
                }
            }
        }
        cur = next;
    }
    cur
}

/// Monomials of `I^e` (`Trivial`) or `I^e·F` (`F`) up to degree `max_deg`.
pub fn candidate_image(tag: KummerTag, max_deg: u32) -> Monomials {
    let (start, parity) = match tag.residual {
        Residual::Trivial => (2 * tag.ideal_exponent, 0),
        Residual::F => (2 * tag.ideal_exponent + 1, 1),
    };
    (start..=max_deg).filter(|d| d % 2 == parity).flat_map(monomials_of_degree).collect()
}

/// Graded dimensions `dim_d` for `d = 0..=max_deg`.
pub fn hilbert_function(m: &Monomials, max_deg: u32) -> Vec<usize> {
    let mut out = vec![0; max_deg as usize + 1];
    for &(a, b) in m {
        out[(a + b) as usize] += 1;
    }
    out
}

/// Identifies `F^{⊗i}` among the candidates `I^e`, `I^e ⊗ F` by comparing
/// truncated graded pieces in degrees up to `2i + 4`.
pub fn kummer_tensor_power(i: u32) -> Option<KummerTag> {
    let max_deg = 2 * i + 4;
    let image = tensor_power_image(i, max_deg);
    let target = hilbert_function(&image, max_deg);
    (0..=i)
        .flat_map(|e| [Residual::Trivial, Residual::F].map(|residual| KummerTag { ideal_exponent: e, residual }))
        .find(|&tag| {
            let cand = candidate_image(tag, max_deg);
            hilbert_function(&cand, max_deg) == target && cand == image
        })
}
