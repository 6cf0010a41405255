//! Exact surface-count bounds.
//!
//! Every value is an exact big integer. Reports carry their multiplicative
//! factors so the product can be re-checked, and sums (the Dehn-filling
//! count) carry their terms.

use crate::bigint;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_integer::binomial;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A compact connected surface, given by genus, number of boundary circles
/// and orientability. For nonorientable surfaces the genus counts crosscaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceClass {
    pub genus: u64,
    pub boundary: u64,
    pub orientable: bool,
}

impl SurfaceClass {
    pub fn new(genus: u64, boundary: u64, orientable: bool) -> Result<SurfaceClass> {
        if !orientable && genus == 0 {
            return Err(Error::OutOfDomain(
                "a nonorientable surface has genus at least 1".into(),
            ));
        }
        Ok(SurfaceClass {
            genus,
            boundary,
            orientable,
        })
    }

    pub fn orientable(genus: u64, boundary: u64) -> SurfaceClass {
        SurfaceClass {
            genus,
            boundary,
            orientable: true,
        }
    }

    pub fn chi(&self) -> i64 {
        let (g, b) = (self.genus as i64, self.boundary as i64);
        if self.orientable {
            2 - 2 * g - b
        } else {
            2 - g - b
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbientCase {
    /// A sphere in the 3-sphere.
    SphereInS3,
    /// The Heegaard torus of a lens space.
    HeegaardTorusLens,
    /// `T² × {0}` in `T² × [-1, 1]`.
    ThickenedTorus,
    /// A boundary-parallel torus in a solid torus.
    SolidTorus,
    /// `F × {0}` in `F × [-1, 1]`.
    ThickenedSurface,
    /// Anything else; the constant X must be supplied.
    Custom,
}

impl AmbientCase {
    pub fn name(self) -> &'static str {
        match self {
            AmbientCase::SphereInS3 => "sphere_in_s3",
            AmbientCase::HeegaardTorusLens => "heegaard_torus_lens",
            AmbientCase::ThickenedTorus => "thickened_torus",
            AmbientCase::SolidTorus => "solid_torus",
            AmbientCase::ThickenedSurface => "thickened_surface",
            AmbientCase::Custom => "custom",
        }
    }

    pub fn default_x(self) -> Option<u64> {
        match self {
            AmbientCase::SphereInS3 => Some(1),
            AmbientCase::Custom => None,
            _ => Some(2),
        }
    }

    fn is_torus(self) -> bool {
        matches!(
            self,
            AmbientCase::HeegaardTorusLens | AmbientCase::ThickenedTorus | AmbientCase::SolidTorus
        )
    }

    fn needs_representativity(self) -> bool {
        matches!(
            self,
            AmbientCase::HeegaardTorusLens | AmbientCase::SolidTorus
        )
    }
}

impl fmt::Display for AmbientCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AmbientCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<AmbientCase> {
        [
            AmbientCase::SphereInS3,
            AmbientCase::HeegaardTorusLens,
            AmbientCase::ThickenedTorus,
            AmbientCase::SolidTorus,
            AmbientCase::ThickenedSurface,
            AmbientCase::Custom,
        ]
        .into_iter()
        .find(|c| c.name() == s.replace('-', "_"))
        .ok_or_else(|| Error::Parse(format!("unknown ambient case `{s}`")))
    }
}

/// Asserted representativity of the diagram on its projection surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representativity {
    Gt4,
    Eq4,
    Unknown,
}

impl FromStr for Representativity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Representativity> {
        match s {
            "gt4" | ">4" => Ok(Representativity::Gt4),
            "eq4" | "4" => Ok(Representativity::Eq4),
            "unknown" => Ok(Representativity::Unknown),
            _ => Err(Error::Parse(format!("unknown representativity `{s}`"))),
        }
    }
}

/// The ambient manifold and the constant X bounding isotopy classes of
/// surfaces with fixed genus and boundary inside a chunk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AmbientContext {
    pub case: AmbientCase,
    pub x: Option<u64>,
    pub representativity: Representativity,
}

impl AmbientContext {
    pub fn new(case: AmbientCase) -> AmbientContext {
        let representativity = if case == AmbientCase::SphereInS3 {
            Representativity::Gt4
        } else {
            Representativity::Unknown
        };
        AmbientContext {
            case,
            x: None,
            representativity,
        }
    }

    pub fn with_x(mut self, x: u64) -> AmbientContext {
        self.x = Some(x);
        self
    }

    pub fn with_representativity(mut self, r: Representativity) -> AmbientContext {
        self.representativity = r;
        self
    }

    /// Explicit X, else the default for the case.
    pub fn resolved_x(&self) -> Result<u64> {
        match self.x.or(self.case.default_x()) {
            Some(0) => Err(Error::OutOfDomain("X must be positive".into())),
            Some(x) => Ok(x),
            None => Err(Error::MissingX),
        }
    }
}

impl Default for AmbientContext {
    fn default() -> AmbientContext {
        AmbientContext::new(AmbientCase::SphereInS3)
    }
}

/// `base ^ exponent`, one multiplicative piece of a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub name: String,
    pub base: u64,
    pub exponent: u64,
}

impl Factor {
    pub fn new(name: &str, base: u64, exponent: u64) -> Factor {
        Factor {
            name: name.to_string(),
            base,
            exponent,
        }
    }

    pub fn value(&self) -> BigUint {
        pow(self.base, self.exponent)
    }
}

/// Echo of the inputs a bound was evaluated at.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Inputs {
    pub n: u64,
    pub chi: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient: Option<AmbientCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slope: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound: String,
    pub inputs: Inputs,
    #[serde(serialize_with = "bigint::serialize")]
    pub value: BigUint,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<Factor>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<BoundReport>,
}

impl BoundReport {
    fn from_factors(bound: &str, inputs: Inputs, factors: Vec<Factor>) -> BoundReport {
        let value = factors.iter().map(Factor::value).product();
        BoundReport {
            bound: bound.to_string(),
            inputs,
            value,
            factors,
            terms: Vec::new(),
        }
    }

    pub(crate) fn from_terms(bound: &str, inputs: Inputs, terms: Vec<BoundReport>) -> BoundReport {
        let value = terms.iter().map(|t| &t.value).sum();
        BoundReport {
            bound: bound.to_string(),
            inputs,
            value,
            factors: Vec::new(),
            terms,
        }
    }

    /// Recomputes the value from factors or terms.
    pub fn recompute(&self) -> BigUint {
        if self.terms.is_empty() {
            self.factors.iter().map(Factor::value).product()
        } else {
            self.terms.iter().map(BoundReport::recompute).sum()
        }
    }

    pub fn log10(&self) -> f64 {
        bigint::log10(&self.value)
    }
}

pub(crate) fn pow(base: u64, exponent: u64) -> BigUint {
    let e = u32::try_from(exponent).expect("exponent fits in 32 bits");
    BigUint::from(base).pow(e)
}

fn check(n: u64, chi: i64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfDomain(
            "the diagram needs at least one crossing".into(),
        ));
    }
    if chi >= 0 {
        return Err(Error::OutOfDomain(format!(
            "bounds need chi < 0, got {chi}"
        )));
    }
    Ok(())
}

/// Exponent of `6n` in the general bounds: `-800 chi^3 + 80 chi^2`.
pub fn cubic_exponent(chi: i64) -> u64 {
    let c = chi as i128;
    u64::try_from(-800 * c * c * c + 80 * c * c).expect("exponent fits in u64")
}

fn neg(k: i64) -> u64 {
    u64::try_from(-k).expect("nonnegative")
}

/// Number of combinations of at most `-20 chi` edge hits: `(6n)^(-20 chi)`.
pub fn curve_bound(n: u64, chi: i64) -> Result<BigUint> {
    check(n, chi)?;
    Ok(pow(6 * n, neg(20 * chi)))
}

/// Meridianally incompressible surfaces for a diagram on a sphere:
/// `(6n)^(80 chi^2)`.
pub fn sphere_count_mi(n: u64, chi: i64) -> Result<BoundReport> {
    check(n, chi)?;
    let inputs = Inputs {
        n,
        chi,
        ..Inputs::default()
    };
    Ok(BoundReport::from_factors(
        "sphere_mi",
        inputs,
        vec![Factor::new("curves", 6 * n, (80 * chi * chi) as u64)],
    ))
}

/// All essential surfaces for a diagram on a sphere:
/// `(6n)^(80 chi^2) 2^(-4 chi + 2)`.
pub fn sphere_count_general(n: u64, chi: i64) -> Result<BoundReport> {
    check(n, chi)?;
    let inputs = Inputs {
        n,
        chi,
        ..Inputs::default()
    };
    Ok(BoundReport::from_factors(
        "sphere",
        inputs,
        vec![
            Factor::new("curves", 6 * n, (80 * chi * chi) as u64),
            Factor::new("tubing", 2, neg(4 * chi) + 2),
        ],
    ))
}

/// Ways to choose which of the `-4 chi + 2` meridianal annuli get tubed:
/// `C(-4 chi + 2, -2 chi + 1)`.
pub fn tubing_count(chi: i64) -> Result<BigUint> {
    if chi >= 0 {
        return Err(Error::OutOfDomain(format!(
            "tubing count needs chi < 0, got {chi}"
        )));
    }
    let value = binomial(
        BigUint::from(neg(4 * chi) + 2),
        BigUint::from(neg(2 * chi) + 1),
    );
    debug_assert!(value <= pow(2, neg(4 * chi) + 2));
    Ok(value)
}

/// `(X (g+1))^(-4 chi) (6n)^(-800 chi^3 + 80 chi^2)` at raw inputs.
pub fn general_count_mi_for(n: u64, chi: i64, genus: u64, x: u64) -> Result<BoundReport> {
    check(n, chi)?;
    let e = neg(4 * chi);
    let inputs = Inputs {
        n,
        chi,
        genus: Some(genus),
        x: Some(x),
        ..Inputs::default()
    };
    Ok(BoundReport::from_factors(
        "general_mi",
        inputs,
        vec![
            Factor::new("isotopy_classes", x, e),
            Factor::new("genus_choices", genus + 1, e),
            Factor::new("curves", 6 * n, cubic_exponent(chi)),
        ],
    ))
}

/// `(2 X (g+1))^(-4 chi + 2) (6n)^(-800 chi^3 + 80 chi^2)` at raw inputs.
pub fn general_count_for(n: u64, chi: i64, genus: u64, x: u64) -> Result<BoundReport> {
    check(n, chi)?;
    let e = neg(4 * chi) + 2;
    let inputs = Inputs {
        n,
        chi,
        genus: Some(genus),
        x: Some(x),
        ..Inputs::default()
    };
    Ok(BoundReport::from_factors(
        "general",
        inputs,
        vec![
            Factor::new("tubing", 2, e),
            Factor::new("isotopy_classes", x, e),
            Factor::new("genus_choices", genus + 1, e),
            Factor::new("curves", 6 * n, cubic_exponent(chi)),
        ],
    ))
}

fn with_class(mut r: BoundReport, sc: &SurfaceClass, ctx: &AmbientContext) -> BoundReport {
    r.inputs.boundary = Some(sc.boundary);
    r.inputs.orientable = Some(sc.orientable);
    r.inputs.ambient = Some(ctx.case);
    r
}

/// Meridianally incompressible essential surfaces of class `sc`.
pub fn general_count_mi(n: u64, sc: &SurfaceClass, ctx: &AmbientContext) -> Result<BoundReport> {
    check(n, sc.chi())?;
    let x = ctx.resolved_x()?;
    Ok(with_class(
        general_count_mi_for(n, sc.chi(), sc.genus, x)?,
        sc,
        ctx,
    ))
}

/// All essential surfaces of class `sc`.
pub fn general_count(n: u64, sc: &SurfaceClass, ctx: &AmbientContext) -> Result<BoundReport> {
    check(n, sc.chi())?;
    let x = ctx.resolved_x()?;
    Ok(with_class(
        general_count_for(n, sc.chi(), sc.genus, x)?,
        sc,
        ctx,
    ))
}

/// Both bounds at X = 2 for diagrams on a torus in a lens space, thickened
/// torus or solid torus.
pub fn torus_chunk_counts(
    n: u64,
    sc: &SurfaceClass,
    ctx: &AmbientContext,
) -> Result<(BoundReport, BoundReport)> {
    if !ctx.case.is_torus() {
        return Err(Error::PreconditionFailed(format!(
            "{} is not a torus case",
            ctx.case
        )));
    }
    if ctx.case.needs_representativity() && ctx.representativity != Representativity::Gt4 {
        return Err(Error::RepresentativityUnasserted(ctx.case.to_string()));
    }
    fixed_x_pair(n, sc, ctx, "torus")
}

/// Both bounds at X = 2 for orientable surfaces in a thickened surface.
pub fn thickened_surface_counts(
    n: u64,
    sc: &SurfaceClass,
    ctx: &AmbientContext,
) -> Result<(BoundReport, BoundReport)> {
    if ctx.case != AmbientCase::ThickenedSurface {
        return Err(Error::PreconditionFailed(format!(
            "{} is not a thickened surface",
            ctx.case
        )));
    }
    if !sc.orientable {
        return Err(Error::PreconditionFailed(
            "X = 2 is only known for orientable surfaces here".into(),
        ));
    }
    fixed_x_pair(n, sc, ctx, "thickened_surface")
}

fn fixed_x_pair(
    n: u64,
    sc: &SurfaceClass,
    ctx: &AmbientContext,
    name: &str,
) -> Result<(BoundReport, BoundReport)> {
    let ctx2 = ctx.with_x(2);
    let mut mi = general_count_mi(n, sc, &ctx2)?;
    let mut all = general_count(n, sc, &ctx2)?;
    mi.bound = format!("{name}_mi");
    all.bound = name.to_string();
    Ok((mi, all))
}

/// Boundary circles added by meridianal compression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AddedBoundaries {
    /// `-4 chi + 2`.
    pub cap: i64,
    /// Curves cutting the surface into pants and Moebius bands, doubled:
    /// `6g - 6 + 2b` orientable, `4g - 6 + 2b` nonorientable.
    pub finer: i64,
}

pub fn max_added_boundaries(sc: &SurfaceClass) -> Result<AddedBoundaries> {
    let chi = sc.chi();
    if chi >= 0 {
        return Err(Error::OutOfDomain(format!("needs chi < 0, got {chi}")));
    }
    let (g, b) = (sc.genus as i64, sc.boundary as i64);
    let finer = if sc.orientable {
        6 * g - 6 + 2 * b
    } else {
        4 * g - 6 + 2 * b
    };
    let cap = -4 * chi + 2;
    if finer > cap {
        return Err(Error::InvariantViolation(format!(
            "finer count {finer} exceeds cap {cap}"
        )));
    }
    Ok(AddedBoundaries { cap, finer })
}

/// `E = (g+1) X C^(-10 chi + 1)` with `C = (6n)^(-20 chi)`; its `-4 chi`
/// power is the meridianally incompressible bound.
pub fn chain_e(n: u64, chi: i64, genus: u64, x: u64) -> Result<BigUint> {
    let c = curve_bound(n, chi)?;
    let e = c.pow(u32::try_from(neg(10 * chi) + 1).expect("small"));
    Ok(e * BigUint::from(genus + 1) * BigUint::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    /// Independent oracle: plain repeated multiplication.
    fn naive_pow(base: u64, exp: u64) -> BigUint {
        let mut acc = BigUint::one();
        let b = BigUint::from(base);
        for _ in 0..exp {
            acc *= &b;
        }
        acc
    }

    #[test]
    fn curve_bound_examples() {
        assert_eq!(curve_bound(1, -1).unwrap().to_string(), "3656158440062976");
        let v = curve_bound(3, -1).unwrap();
        assert_eq!(v, naive_pow(18, 20));
        assert_eq!(v.to_string().len(), 26);
        assert!(matches!(curve_bound(3, 0), Err(Error::OutOfDomain(_))));
        assert!(matches!(curve_bound(0, -1), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn sphere_examples() {
        let mi = sphere_count_mi(3, -1).unwrap();
        assert_eq!(mi.value, naive_pow(18, 80));
        assert_eq!(mi.value, curve_bound(3, -1).unwrap().pow(4));
        assert_eq!(sphere_count_mi(5, -2).unwrap().value, naive_pow(30, 320));
        assert_eq!(
            sphere_count_general(3, -1).unwrap().value,
            naive_pow(18, 80) * 64u32
        );
        assert_eq!(
            sphere_count_general(1, -1).unwrap().value,
            naive_pow(6, 80) * 64u32
        );
    }

    #[test]
    fn tubing_examples() {
        assert_eq!(tubing_count(-1).unwrap(), BigUint::from(20u32));
        assert_eq!(tubing_count(-2).unwrap(), BigUint::from(252u32));
        assert_eq!(tubing_count(-3).unwrap(), BigUint::from(3432u32));
        for chi in -50..0 {
            assert!(tubing_count(chi).unwrap() <= pow(2, (-4 * chi + 2) as u64));
        }
        assert!(tubing_count(0).is_err());
    }

    #[test]
    fn general_mi_example() {
        let sc = SurfaceClass::orientable(1, 2);
        assert_eq!(sc.chi(), -2);
        assert_eq!(cubic_exponent(-2), 6720);
        let r =
            general_count_mi(3, &sc, &AmbientContext::new(AmbientCase::Custom).with_x(2)).unwrap();
        assert_eq!(r.value, naive_pow(4, 8) * naive_pow(18, 6720));
        assert_eq!(r.recompute(), r.value);
    }

    #[test]
    fn general_example() {
        assert_eq!(cubic_exponent(-1), 880);
        let r = general_count_for(3, -1, 1, 1).unwrap();
        assert_eq!(r.value, naive_pow(4, 6) * naive_pow(18, 880));
        let mi = general_count_mi_for(3, -1, 1, 1).unwrap();
        assert!(mi.value <= r.value);
        let non = SurfaceClass::new(3, 1, false).unwrap();
        assert_eq!(non.chi(), -2);
        let r = general_count(5, &non, &AmbientContext::new(AmbientCase::SphereInS3)).unwrap();
        assert_eq!(r.value, naive_pow(2 * 4, 10) * naive_pow(30, 6720));
    }

    #[test]
    fn missing_x_and_domain() {
        let sc = SurfaceClass::orientable(2, 0);
        assert_eq!(
            general_count(3, &sc, &AmbientContext::new(AmbientCase::Custom)),
            Err(Error::MissingX)
        );
        let torus = SurfaceClass::orientable(1, 0);
        assert!(matches!(
            general_count(3, &torus, &AmbientContext::default()),
            Err(Error::OutOfDomain(_))
        ));
        assert!(SurfaceClass::new(0, 1, false).is_err());
    }

    #[test]
    fn torus_cases() {
        let sc = SurfaceClass::orientable(1, 1);
        let ctx = AmbientContext::new(AmbientCase::ThickenedTorus);
        let (mi, all) = torus_chunk_counts(4, &sc, &ctx).unwrap();
        assert_eq!(mi.value, naive_pow(4, 4) * naive_pow(24, 880));
        assert_eq!(all.value, general_count_for(4, -1, 1, 2).unwrap().value);
        let solid = AmbientContext::new(AmbientCase::SolidTorus);
        assert_eq!(
            torus_chunk_counts(4, &sc, &solid),
            Err(Error::RepresentativityUnasserted("solid_torus".into()))
        );
        let solid = solid.with_representativity(Representativity::Gt4);
        assert_eq!(
            torus_chunk_counts(4, &sc, &solid).unwrap().0.value,
            mi.value
        );
        assert!(torus_chunk_counts(4, &sc, &AmbientContext::default()).is_err());
    }

    #[test]
    fn thickened_surface_case() {
        let ctx = AmbientContext::new(AmbientCase::ThickenedSurface);
        let sc = SurfaceClass::orientable(2, 0);
        let (mi, _) = thickened_surface_counts(5, &sc, &ctx).unwrap();
        assert_eq!(mi.value, general_count_mi_for(5, -2, 2, 2).unwrap().value);
        let non = SurfaceClass::new(3, 0, false).unwrap();
        assert!(thickened_surface_counts(5, &non, &ctx).is_err());
    }

    #[test]
    fn added_boundary_examples() {
        let r = max_added_boundaries(&SurfaceClass::orientable(2, 0)).unwrap();
        assert_eq!((r.finer, r.cap), (6, 10));
        let r = max_added_boundaries(&SurfaceClass::new(3, 1, false).unwrap()).unwrap();
        assert_eq!((r.finer, r.cap), (8, 10));
        let r = max_added_boundaries(&SurfaceClass::orientable(1, 1)).unwrap();
        assert_eq!((r.finer, r.cap), (2, 6));
    }

    #[test]
    fn exponent_algebra() {
        for chi in -10i64..0 {
            let lhs = (-20 * chi) * (-10 * chi + 1) * (-4 * chi);
            assert_eq!(lhs as u64, cubic_exponent(chi));
        }
    }

    #[test]
    fn chain_matches_general_mi() {
        for (n, chi, g, x) in [(1, -1, 0, 1), (3, -2, 1, 2), (2, -3, 4, 1)] {
            let e = chain_e(n, chi, g, x).unwrap();
            let direct = general_count_mi_for(n, chi, g, x).unwrap().value;
            assert_eq!(e.pow((-4 * chi) as u32), direct);
        }
    }

    proptest! {
        #[test]
        fn monotone_in_n_and_chi(n in 1u64..8, chi in -3i64..0, g in 0u64..4, x in 1u64..3) {
            let a = general_count_for(n, chi, g, x).unwrap().value;
            prop_assert!(general_count_for(n + 1, chi, g, x).unwrap().value >= a.clone());
            prop_assert!(general_count_for(n, chi - 1, g, x).unwrap().value >= a.clone());
            prop_assert!(general_count_mi_for(n, chi, g, x).unwrap().value <= a);
            prop_assert!(sphere_count_mi(n, chi).unwrap().value <= sphere_count_general(n, chi).unwrap().value);
            prop_assert!(curve_bound(n + 1, chi).unwrap() >= curve_bound(n, chi).unwrap());
        }

        #[test]
        fn factor_products_match(n in 1u64..6, chi in -3i64..0, g in 0u64..4, x in 1u64..3) {
            for r in [general_count_for(n, chi, g, x).unwrap(), general_count_mi_for(n, chi, g, x).unwrap(),
                      sphere_count_mi(n, chi).unwrap(), sphere_count_general(n, chi).unwrap()] {
                prop_assert_eq!(r.recompute(), r.value);
            }
        }

        #[test]
        fn sphere_mi_is_curve_bound_power(n in 1u64..20, chi in -4i64..0) {
            let c = curve_bound(n, chi).unwrap();
            prop_assert_eq!(sphere_count_mi(n, chi).unwrap().value, c.pow((-4 * chi) as u32));
        }
    }
}
