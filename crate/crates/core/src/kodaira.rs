//! Kodaira fibers and the numerical invariants of a fiber configuration.
//!
//! [`fiber_model`] returns the component lattice of each fiber type together
//! with the component multiplicities and the singular points of the reduced
//! fiber. [`numerical_invariants`] sums Euler numbers and applies the
//! canonical bundle formula to get `χ`, `λ` and the Kodaira dimension.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{qi, Rational};
use crate::lattice::{CurveConfig, QDivisor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KodairaError {
    #[error("fiber multiplicity must be at least 1, got {0}")]
    InvalidMultiplicity(u32),
    #[error("multiple fibers must have smooth elliptic reduction (mI0), got {multiplicity}{kind}")]
    MultipleFiberNotSmooth { kind: FiberKind, multiplicity: u32 },
    #[error("Euler number {e} is not divisible by 12")]
    NonIntegralEuler { e: u64 },
    #[error("unknown fiber kind `{0}`")]
    UnknownKind(String),
}

/// Kodaira's fiber types. `I(0)` is a smooth elliptic fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FiberKind {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl fmt::Display for FiberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberKind::I(n) => write!(f, "I{n}"),
            FiberKind::IStar(n) => write!(f, "I{n}*"),
            FiberKind::II => write!(f, "II"),
            FiberKind::III => write!(f, "III"),
            FiberKind::IV => write!(f, "IV"),
            FiberKind::IIStar => write!(f, "II*"),
            FiberKind::IIIStar => write!(f, "III*"),
            FiberKind::IVStar => write!(f, "IV*"),
        }
    }
}

impl FromStr for FiberKind {
    type Err = KodairaError;

    /// Accepts `I<n>`, `I<n>*`, `II`, `III`, `IV` and their starred forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let kind = match t {
            "II" => FiberKind::II,
            "III" => FiberKind::III,
            "IV" => FiberKind::IV,
            "II*" => FiberKind::IIStar,
            "III*" => FiberKind::IIIStar,
            "IV*" => FiberKind::IVStar,
            _ => {
                let rest = t.strip_prefix('I').ok_or_else(|| KodairaError::UnknownKind(s.into()))?;
                let (digits, star) = match rest.strip_suffix('*') {
                    Some(d) => (d, true),
                    None => (rest, false),
                };
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(KodairaError::UnknownKind(s.into()));
                }
                let n: u32 = digits.parse().map_err(|_| KodairaError::UnknownKind(s.into()))?;
                if star {
                    FiberKind::IStar(n)
                } else {
                    FiberKind::I(n)
                }
            }
        };
        Ok(kind)
    }
}

/// A fiber kind with its multiplicity. Only `I0` may be multiple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiberType {
    kind: FiberKind,
    multiplicity: u32,
}

impl FiberType {
    pub fn new(kind: FiberKind, multiplicity: u32) -> Result<Self, KodairaError> {
        if multiplicity == 0 {
            return Err(KodairaError::InvalidMultiplicity(0));
        }
        if multiplicity > 1 && kind != FiberKind::I(0) {
            return Err(KodairaError::MultipleFiberNotSmooth { kind, multiplicity });
        }
        Ok(Self { kind, multiplicity })
    }

    /// Reduced (non-multiple) fiber of the given kind.
    pub fn simple(kind: FiberKind) -> Self {
        Self { kind, multiplicity: 1 }
    }

    /// The multiple fiber `mI0`.
    pub fn multiple(m: u32) -> Result<Self, KodairaError> {
        Self::new(FiberKind::I(0), m)
    }

    pub fn kind(&self) -> FiberKind {
        self.kind
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn is_multiple(&self) -> bool {
        self.multiplicity > 1
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity > 1 {
            write!(f, "{}", self.multiplicity)?;
        }
        write!(f, "{}", self.kind)
    }
}

/// Geometry of a single fiber component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentShape {
    SmoothRational,
    SmoothElliptic,
    NodalRational,
    CuspidalRational,
}

/// Local type of a singular point of the reduced fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LocalType {
    Node,
    Cusp,
    Tangency,
    TriplePoint,
}

impl LocalType {
    /// Largest `r` with `I_Z ⊂ m^r` at a point of this type, where `I_Z` is
    /// the ideal of the zero scheme of `df`. Nodes, tangencies and cusps give
    /// `m` or an ideal containing an element of order one; an ordinary triple
    /// point `xy(x-y)` has Jacobian ideal inside `m²`.
    pub fn ideal_order(self) -> u32 {
        match self {
            LocalType::Node | LocalType::Cusp | LocalType::Tangency => 1,
            LocalType::TriplePoint => 2,
        }
    }
}

/// A singular point of the reduced fiber and the components through it.
/// A self-node or cusp lists its component once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZNode {
    pub components: Vec<usize>,
    pub local: LocalType,
}

/// Component lattice, multiplicities and singular points of one fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberModel {
    pub fiber: FiberType,
    pub components: Arc<CurveConfig>,
    pub mult_vector: Vec<u32>,
    pub shapes: Vec<ComponentShape>,
    pub znodes: Vec<ZNode>,
}

impl FiberModel {
    /// `f*b` as a divisor on the components.
    pub fn fiber_divisor(&self) -> QDivisor {
        let coeffs = self.mult_vector.iter().map(|&m| qi(m.into())).collect();
        QDivisor::new(self.components.clone(), coeffs).expect("catalog sizes agree")
    }

    /// `f*b - (f*b)_red` for a non-multiple fiber; zero for multiple fibers,
    /// whose contribution to `D` is the `(m-1)F` part instead.
    pub fn d0_divisor(&self) -> QDivisor {
        if self.fiber.is_multiple() {
            return QDivisor::zero(self.components.clone());
        }
        let coeffs = self.mult_vector.iter().map(|&m| qi(i64::from(m) - 1)).collect();
        QDivisor::new(self.components.clone(), coeffs).expect("catalog sizes agree")
    }

    /// Number of singular points of the reduced fiber.
    pub fn z_scheme_length(&self) -> usize {
        self.znodes.len()
    }
}

fn node(a: usize, b: usize) -> ZNode {
    ZNode { components: vec![a, b], local: LocalType::Node }
}

fn tree_gram(r: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; r]; r];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(a, b) in edges {
        g[a][b] += 1;
        g[b][a] += 1;
    }
    g
}

fn tree_model(fiber: FiberType, mults: Vec<u32>, edges: &[(usize, usize)]) -> FiberModel {
    let r = mults.len();
    let gram = tree_gram(r, edges);
    FiberModel {
        fiber,
        components: Arc::new(CurveConfig::from_int_gram(&gram).expect("symmetric")),
        mult_vector: mults,
        shapes: vec![ComponentShape::SmoothRational; r],
        znodes: edges.iter().map(|&(a, b)| node(a, b)).collect(),
    }
}

/// Component lattice of a fiber type.
pub fn fiber_model(t: FiberType) -> FiberModel {
    let single = |shape, znodes| FiberModel {
        fiber: t,
        components: Arc::new(CurveConfig::from_int_gram(&[vec![0]]).expect("1x1")),
        mult_vector: vec![t.multiplicity()],
        shapes: vec![shape],
        znodes,
    };
    match t.kind() {
        FiberKind::I(0) => single(ComponentShape::SmoothElliptic, vec![]),
        FiberKind::I(1) => {
            single(ComponentShape::NodalRational, vec![ZNode { components: vec![0], local: LocalType::Node }])
        }
        FiberKind::I(n) => {
            let n = n as usize;
            let edges: Vec<(usize, usize)> = (0..n).map(|k| (k, (k + 1) % n)).collect();
            tree_model(t, vec![1; n], &edges)
        }
        FiberKind::II => {
            single(ComponentShape::CuspidalRational, vec![ZNode { components: vec![0], local: LocalType::Cusp }])
        }
        FiberKind::III => {
            let mut m = tree_model(t, vec![1, 1], &[(0, 1), (0, 1)]);
            m.znodes = vec![ZNode { components: vec![0, 1], local: LocalType::Tangency }];
            m
        }
        FiberKind::IV => {
            let mut m = tree_model(t, vec![1, 1, 1], &[(0, 1), (1, 2), (0, 2)]);
            m.znodes = vec![ZNode { components: vec![0, 1, 2], local: LocalType::TriplePoint }];
            m
        }
        FiberKind::IStar(n) => {
            // chain 0..=n of multiplicity 2, two ends on each side
            let n = n as usize;
            let mut mults = vec![2; n + 1];
            mults.extend([1, 1, 1, 1]);
            let mut edges: Vec<(usize, usize)> = (0..n).map(|k| (k, k + 1)).collect();
            edges.extend([(0, n + 1), (0, n + 2), (n, n + 3), (n, n + 4)]);
            tree_model(t, mults, &edges)
        }
        FiberKind::IVStar => {
            tree_model(t, vec![3, 2, 1, 2, 1, 2, 1], &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        }
        FiberKind::IIIStar => {
            tree_model(t, vec![1, 2, 3, 4, 3, 2, 1, 2], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)])
        }
        FiberKind::IIStar => tree_model(
            t,
            vec![2, 4, 6, 5, 4, 3, 2, 1, 3],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)],
        ),
    }
}

/// Topological Euler number of the fiber.
pub fn euler_number(t: FiberType) -> u64 {
    match t.kind() {
        FiberKind::I(n) => n.into(),
        FiberKind::II => 2,
        FiberKind::III => 3,
        FiberKind::IV => 4,
        FiberKind::IStar(n) => 6 + u64::from(n),
        FiberKind::IVStar => 8,
        FiberKind::IIIStar => 9,
        FiberKind::IIStar => 10,
    }
}

/// Fiber types listed by the `catalog` dump: every fixed type plus the two
/// families up to `max_n`.
pub fn catalog(max_n: u32) -> Vec<FiberType> {
    let mut out: Vec<FiberType> = (0..=max_n).map(|n| FiberType::simple(FiberKind::I(n))).collect();
    out.push(FiberType { kind: FiberKind::I(0), multiplicity: 2 });
    out.extend((0..=max_n).map(|n| FiberType::simple(FiberKind::IStar(n))));
    out.extend(
        [FiberKind::II, FiberKind::III, FiberKind::IV, FiberKind::IVStar, FiberKind::IIIStar, FiberKind::IIStar]
            .map(FiberType::simple),
    );
    out
}

/// Optional hypotheses a user may assert about the surface.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Assumptions {
    /// The fibration is known to be standard (relatively minimal model equals
    /// the minimal resolution of the quotient).
    pub standard: Option<bool>,
    /// The tautological class on `P(Ω_X)` is nef in codimension one.
    pub zeta_nef_codim_one: bool,
    /// The tautological class on `P(Ω_X)` is pseudoeffective, i.e. `Ω_X` is.
    pub zeta_pseudoeffective: bool,
}

/// Base genus and singular fibers of a relatively minimal elliptic fibration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiberConfiguration {
    pub base_genus: u32,
    pub fibers: Vec<FiberType>,
    pub isotrivial: bool,
    pub cm_flag: Option<bool>,
    pub assumptions: Assumptions,
}

impl FiberConfiguration {
    pub fn new(base_genus: u32, fibers: Vec<FiberType>) -> Self {
        Self { base_genus, fibers, ..Self::default() }
    }

    pub fn isotrivial(mut self, yes: bool) -> Self {
        self.isotrivial = yes;
        self
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.fibers.iter().filter(|f| f.is_multiple()).map(|f| f.multiplicity()).collect()
    }

    /// Sum of fiber Euler numbers.
    pub fn euler(&self) -> u64 {
        self.fibers.iter().map(|&f| euler_number(f)).sum()
    }

    /// Only multiple fibers (or none): `e = 0`.
    pub fn is_almost_smooth(&self) -> bool {
        self.euler() == 0
    }
}

/// `κ` of an elliptic surface, determined by the sign of `δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KodairaDim {
    NegInfinity,
    Zero,
    One,
}

impl fmt::Display for KodairaDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaDim::NegInfinity => write!(f, "-inf"),
            KodairaDim::Zero => write!(f, "0"),
            KodairaDim::One => write!(f, "1"),
        }
    }
}

/// `e`, `χ`, `λ = Σ(1 - 1/m_i)`, `δ = 2g(B) - 2 + χ + λ` and `κ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalInvariants {
    pub e: u64,
    pub chi: i64,
    #[serde(with = "crate::arith::serde_rational")]
    pub lambda: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub delta: Rational,
    pub kappa: KodairaDim,
}

/// `λ = Σ (1 - 1/m_i)` over the multiple fibers.
pub fn lambda(c: &FiberConfiguration) -> Rational {
    c.fibers
        .iter()
        .map(|f| Rational::new(i64::from(f.multiplicity() - 1).into(), i64::from(f.multiplicity()).into()))
        .sum()
}

pub fn numerical_invariants(c: &FiberConfiguration) -> Result<NumericalInvariants, KodairaError> {
    let e = c.euler();
    if !e.is_multiple_of(12) {
        return Err(KodairaError::NonIntegralEuler { e });
    }
    let chi = (e / 12) as i64;
    let lambda = lambda(c);
    let delta = qi(2 * i64::from(c.base_genus) - 2 + chi) + &lambda;
    let kappa = if delta.is_positive() {
        KodairaDim::One
    } else if delta.is_zero() {
        KodairaDim::Zero
    } else {
        KodairaDim::NegInfinity
    };
    Ok(NumericalInvariants { e, chi, lambda, delta, kappa })
}

/// One non-reduced, non-multiple fiber and its divisor `D_{0,b}`.
#[derive(Clone, Debug)]
pub struct D0Entry {
    pub fiber_index: usize,
    pub model: FiberModel,
    pub divisor: QDivisor,
}

/// The pieces of `D = Σ(m_i - 1)F_i + D_0`.
#[derive(Clone, Debug)]
pub struct DDivisor {
    /// `Σ (m_i - 1)/m_i`: the multiple of a general fiber that
    /// `Σ (m_i - 1)F_i` is numerically equivalent to.
    pub lambda_part: Rational,
    pub d0_models: Vec<D0Entry>,
    /// Number of singular points of the reduced fibers.
    pub z_total: usize,
}

pub fn d_divisor(c: &FiberConfiguration) -> DDivisor {
    let mut d0_models = Vec::new();
    let mut z_total = 0;
    for (idx, &f) in c.fibers.iter().enumerate() {
        let model = fiber_model(f);
        z_total += model.z_scheme_length();
        if f.is_multiple() || model.mult_vector.iter().all(|&m| m == 1) {
            continue;
        }
        let divisor = model.d0_divisor();
        d0_models.push(D0Entry { fiber_index: idx, model, divisor });
    }
    DDivisor { lambda_part: lambda(c), d0_models, z_total }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use crate::lattice::{definiteness, zariski_decompose, Definiteness};

    fn i0s() -> FiberType {
        FiberType::simple(FiberKind::IStar(0))
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("I0*".parse::<FiberKind>().unwrap(), FiberKind::IStar(0));
        assert_eq!("I12".parse::<FiberKind>().unwrap(), FiberKind::I(12));
        assert_eq!("IV*".parse::<FiberKind>().unwrap(), FiberKind::IVStar);
        assert!("V".parse::<FiberKind>().is_err());
        assert!("I".parse::<FiberKind>().is_err());
        assert!("I-1".parse::<FiberKind>().is_err());
        for t in catalog(3) {
            assert_eq!(t.kind().to_string().parse::<FiberKind>().unwrap(), t.kind());
        }
    }

    #[test]
    fn multiplicity_rules() {
        assert_eq!(FiberType::new(FiberKind::I(0), 0), Err(KodairaError::InvalidMultiplicity(0)));
        assert!(matches!(FiberType::new(FiberKind::I(2), 3), Err(KodairaError::MultipleFiberNotSmooth { .. })));
        assert_eq!(FiberType::multiple(2).unwrap().to_string(), "2I0");
    }

    #[test]
    fn model_examples() {
        let m = fiber_model(i0s());
        assert_eq!(m.components.len(), 5);
        assert_eq!(m.znodes.len(), 4);
        let m = fiber_model(FiberType::multiple(2).unwrap());
        assert_eq!(m.components.len(), 1);
        assert!(m.znodes.is_empty());
        let m = fiber_model(FiberType::simple(FiberKind::I(3)));
        assert_eq!(m.components.len(), 3);
        assert_eq!(m.znodes.len(), 3);
        assert_eq!(fiber_model(FiberType::simple(FiberKind::IIStar)).components.len(), 9);
        assert_eq!(fiber_model(FiberType::simple(FiberKind::IIIStar)).components.len(), 8);
        assert_eq!(fiber_model(FiberType::simple(FiberKind::IVStar)).components.len(), 7);
    }

    #[test]
    fn catalog_lattices_are_fibers() {
        for t in catalog(4) {
            let m = fiber_model(t);
            let all: Vec<usize> = (0..m.components.len()).collect();
            let Definiteness::NegativeSemidefinite(kernel) = definiteness(&m.components, &all).unwrap() else {
                panic!("{t}: not semidefinite");
            };
            assert_eq!(kernel.len(), 1, "{t}");
            let primitive = crate::arith::primitive_integer_vector(
                &m.mult_vector.iter().map(|&x| qi(x.into())).collect::<Vec<_>>(),
            );
            assert_eq!(kernel[0], primitive, "{t}");
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_number(FiberType::multiple(3).unwrap()), 0);
        assert_eq!(euler_number(i0s()), 6);
        assert_eq!(euler_number(FiberType::simple(FiberKind::I(1))), 1);
    }

    #[test]
    fn invariants_examples() {
        let kummer = FiberConfiguration::new(0, vec![i0s(); 4]);
        let inv = numerical_invariants(&kummer).unwrap();
        assert_eq!((inv.e, inv.chi), (24, 2));
        assert_eq!(inv.lambda, qi(0));
        assert_eq!(inv.delta, qi(0));
        assert_eq!(inv.kappa, KodairaDim::Zero);

        let six = FiberConfiguration::new(0, vec![i0s(); 6]);
        let inv = numerical_invariants(&six).unwrap();
        assert_eq!((inv.e, inv.chi), (36, 3));
        assert_eq!(inv.delta, qi(1));
        assert_eq!(inv.kappa, KodairaDim::One);

        let bad = FiberConfiguration::new(0, vec![FiberType::simple(FiberKind::I(1))]);
        assert_eq!(numerical_invariants(&bad), Err(KodairaError::NonIntegralEuler { e: 1 }));

        let rational = FiberConfiguration::new(0, vec![FiberType::simple(FiberKind::I(1)); 12]);
        assert_eq!(numerical_invariants(&rational).unwrap().kappa, KodairaDim::NegInfinity);
    }

    #[test]
    fn d_divisor_examples() {
        let c = FiberConfiguration::new(0, vec![FiberType::multiple(2).unwrap()]);
        let d = d_divisor(&c);
        assert_eq!(d.lambda_part, q(1, 2));
        assert!(d.d0_models.is_empty());
        assert_eq!(d.z_total, 0);

        let c = FiberConfiguration::new(0, vec![i0s()]);
        let d = d_divisor(&c);
        assert_eq!(d.lambda_part, qi(0));
        assert_eq!(d.d0_models.len(), 1);
        assert_eq!(d.d0_models[0].divisor.coeffs(), &[qi(1), qi(0), qi(0), qi(0), qi(0)]);
        assert_eq!(d.z_total, 4);

        let c = FiberConfiguration::new(0, vec![FiberType::simple(FiberKind::II)]);
        let d = d_divisor(&c);
        assert!(d.d0_models.is_empty());
        assert_eq!(d.z_total, 1);
    }

    #[test]
    fn d0_is_its_own_negative_part() {
        for t in catalog(4) {
            let m = fiber_model(t);
            let d0 = m.d0_divisor();
            let z = zariski_decompose(&d0).unwrap();
            assert!(z.positive.is_zero(), "{t}");
            assert_eq!(z.negative, d0, "{t}");
        }
    }
}
