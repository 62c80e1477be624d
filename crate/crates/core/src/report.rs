//! JSON report documents for the command line front end.
//!
//! Floating point fields go through [`Num12`]: 12 significant digits, `-0`
//! printed as `0`, integral values printed without a fraction.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::io::serialize;
use crate::linalg::{char_poly_with_limit, Spectrum, DEFAULT_ORDER_LIMIT};
use crate::multigraph::line_degree_check;
use crate::power::{predict_power_spectrum, verify_power_spectrum, PowerParams};
use crate::scalar::{Real, Tolerances};
use crate::spectral::{signless_laplacian, verify_poly_identity_line, HypergraphSpectrum};
use crate::structure::{
    balanced_bipartition_to_kernel, coloring_bound, degree_sum_bounds, detect_easy_balanced_patterns,
    diameter_upper_bound, distinct_eigenvalues_vs_diameter, greedy_min_degree_coloring,
    partial_bipartition_from_kernel, regularity_conditions, spectral_edge_count, PartialBipartition,
};

/// A float rounded to 12 significant digits on output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num12(pub f64);

impl Num12 {
    pub fn of<T: Real>(x: T) -> Self {
        Self(x.as_f64())
    }

    pub fn rounded(self) -> f64 {
        if !self.0.is_finite() || self.0 == 0.0 {
            return if self.0 == 0.0 { 0.0 } else { self.0 };
        }
        let r: f64 = format!("{:.11e}", self.0).parse().unwrap_or(self.0);
        if r == 0.0 {
            0.0
        } else {
            r
        }
    }
}

impl Serialize for Num12 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = self.rounded();
        if r.fract() == 0.0 && r.abs() < 1e15 {
            s.serialize_i64(r as i64)
        } else {
            s.serialize_f64(r)
        }
    }
}

/// A report section that either ran or was skipped with a reason.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Section<T> {
    Done(T),
    Skipped(String),
}

impl<T> Section<T> {
    fn skipped(reason: &str) -> Self {
        Section::Skipped(format!("skipped: {reason}"))
    }

    pub fn done(&self) -> Option<&T> {
        match self {
            Section::Done(t) => Some(t),
            Section::Skipped(_) => None,
        }
    }
}

const NEEDS_CONNECTED: &str = "requires connectivity";

/// Absolute tolerances in force, plus the scale max(1, ρ) they were
/// resolved against.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ToleranceRecord {
    pub solve: Num12,
    pub group: Num12,
    pub zero: Num12,
    pub scale: Num12,
}

impl ToleranceRecord {
    fn of<T: Real>(spec: &Spectrum<T>) -> Self {
        let t = spec.tolerances();
        let rho = spec.values().iter().fold(T::zero(), |a, v| a.max(v.abs()));
        Self {
            solve: Num12::of(t.solve),
            group: Num12::of(t.group),
            zero: Num12::of(t.zero),
            scale: Num12::of(rho.max(T::one())),
        }
    }
}

fn coefficient_json(c: &BigInt) -> Value {
    c.to_i64().map(Value::from).unwrap_or_else(|| Value::String(c.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    /// Distinct eigenvalues, descending.
    pub eigenvalues: Vec<Num12>,
    pub multiplicities: Vec<usize>,
    pub rho: Num12,
    pub tolerances: ToleranceRecord,
    pub sweeps: usize,
    /// Coefficients of det(xI - Q), leading first, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charpoly: Option<Section<Vec<Value>>>,
}

fn spectrum_section<T: Real>(h: &Hypergraph, hs: &HypergraphSpectrum<T>, exact_charpoly: bool) -> Result<SpectrumReport> {
    let spec = hs.spectrum();
    let charpoly = if exact_charpoly {
        let big = hs.q().map(|&x| BigInt::from(x));
        Some(match char_poly_with_limit(&big, DEFAULT_ORDER_LIMIT) {
            Ok(p) => Section::Done(p.descending().iter().map(coefficient_json).collect()),
            Err(Error::OrderLimitExceeded { order, limit }) => {
                Section::Skipped(format!("skipped: order {order} exceeds limit {limit}"))
            }
            Err(e) => return Err(e),
        })
    } else {
        None
    };
    Ok(SpectrumReport {
        k: h.k(),
        n: h.n(),
        m: h.m(),
        // the zero cluster is reported as exactly 0
        eigenvalues: spec
            .groups()
            .iter()
            .map(|g| Num12::of(if spec.is_zero(g.value) { T::zero() } else { g.value }))
            .collect(),
        multiplicities: spec.groups().iter().map(|g| g.multiplicity).collect(),
        rho: Num12::of(hs.rho()),
        tolerances: ToleranceRecord::of(spec),
        sweeps: spec.sweeps(),
        charpoly,
    })
}

pub fn spectrum_report<T: Real>(h: &Hypergraph, tol: &Tolerances<T>, exact_charpoly: bool) -> Result<SpectrumReport> {
    spectrum_section(h, &HypergraphSpectrum::compute(h, tol)?, exact_charpoly)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexValue {
    pub vertex: String,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeSection {
    pub per_vertex: Vec<VertexValue>,
    pub min: usize,
    pub max: usize,
    pub average: Num12,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsSection {
    pub edge_degree_sum_min: usize,
    pub edge_degree_sum_max: usize,
    pub k_average_degree: Num12,
    pub k_max_degree: usize,
    pub rho: Num12,
    pub holds: bool,
    pub tolerance: Num12,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularitySection {
    pub regular: bool,
    pub rho_equals_kd: bool,
    pub rho_equals_k_delta: bool,
    pub principal_uniform: bool,
    pub agree: bool,
    pub tolerance: Num12,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColoringSection {
    pub bound: usize,
    pub colors_used: usize,
    pub proper: bool,
    pub within_bound: bool,
    pub assignment: Vec<VertexValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionCertificate {
    pub v0: Vec<String>,
    pub v1: Vec<String>,
    pub v2: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
}

impl PartitionCertificate {
    fn of(h: &Hypergraph, p: &PartialBipartition) -> Self {
        let names = |side: &[usize]| side.iter().map(|&v| h.vertices()[v].clone()).collect();
        Self {
            v0: names(&p.v0),
            v1: names(&p.v1),
            v2: names(&p.v2),
            ratio: p.balanced.map(|r| r.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroSection {
    pub min_eigenvalue: Num12,
    pub has_zero: bool,
    pub multiplicity: usize,
    /// Partition read off a kernel vector, when 0 is an eigenvalue.
    pub partition: Option<PartitionCertificate>,
    pub partition_valid: Option<bool>,
    /// A balanced pattern found combinatorially and its kernel residual
    /// ‖Qx‖ / (‖Q‖_F ‖x‖).
    pub balanced_pattern: Option<PartitionCertificate>,
    pub balanced_residual: Option<Num12>,
    pub tolerance: Num12,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistinctSection {
    pub distinct: usize,
    pub diameter: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiameterBoundSection {
    pub bound: usize,
    pub diameter: usize,
    pub lambda1: Num12,
    pub lambda2: Num12,
    pub x_min: Num12,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assertion {
    pub name: &'static str,
    pub held: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub connected: bool,
    pub components: usize,
    pub diameter: Section<usize>,
    pub degrees: DegreeSection,
    pub spectrum: SpectrumReport,
    pub rho: Num12,
    pub edge_count_from_spectrum: Option<usize>,
    pub bounds: Section<BoundsSection>,
    pub regularity: Section<RegularitySection>,
    pub coloring: ColoringSection,
    pub zero_eigenvalue: ZeroSection,
    pub distinct_vs_diameter: Section<DistinctSection>,
    pub diameter_upper_bound: Section<DiameterBoundSection>,
    pub poly_identity: Section<bool>,
    pub assertions: Vec<Assertion>,
    pub all_held: bool,
}

impl AnalysisReport {
    pub fn first_failed(&self) -> Option<&'static str> {
        self.assertions.iter().find(|a| !a.held).map(|a| a.name)
    }
}

fn kernel_residual<T: Real>(hs: &HypergraphSpectrum<T>, x: &[T]) -> Result<T> {
    let q = hs.q().cast::<T>();
    let qx = q.mul_vec(x)?;
    let num = qx.iter().map(|v| *v * *v).sum::<T>().sqrt();
    let xn = x.iter().map(|v| *v * *v).sum::<T>().sqrt();
    Ok(num / (q.frobenius_norm() * xn).max(T::min_positive_value()))
}

/// Runs every structural check on `h`. Sections that need a connected
/// hypergraph are skipped otherwise.
pub fn analyze<T: Real>(h: &Hypergraph, tol: &Tolerances<T>, exact_charpoly: bool) -> Result<AnalysisReport> {
    let hs = HypergraphSpectrum::compute(h, tol)?;
    let spec = hs.spectrum();
    let t = spec.tolerances();
    let connected = hs.is_connected();
    let mut assertions = Vec::new();
    let mut check = |name: &'static str, held: bool| assertions.push(Assertion { name, held });

    check("line-degree-identity", line_degree_check(h));

    let d = h.degrees();
    let names = |values: &[usize]| {
        h.vertices()
            .iter()
            .cloned()
            .zip(values.iter().copied())
            .map(|(vertex, value)| VertexValue { vertex, value })
            .collect::<Vec<_>>()
    };
    let degrees = DegreeSection {
        per_vertex: names(&d.per_vertex),
        min: d.min,
        max: d.max,
        average: Num12(*d.average.numer() as f64 / *d.average.denom() as f64),
        regular: d.is_regular(),
    };

    let edge_count_from_spectrum = spectral_edge_count(spec.values(), h.k()).ok();
    check("edge-count-from-spectrum", edge_count_from_spectrum == Some(h.m()));

    let bounds = if connected {
        let b = degree_sum_bounds(h, &hs);
        let holds = b.holds.unwrap_or(false);
        check("degree-sum-bounds", holds);
        Section::Done(BoundsSection {
            edge_degree_sum_min: b.lower,
            edge_degree_sum_max: b.upper,
            k_average_degree: Num12(*b.k_average.numer() as f64 / *b.k_average.denom() as f64),
            k_max_degree: b.k_max,
            rho: Num12::of(b.rho),
            holds,
            tolerance: Num12::of(t.zero),
        })
    } else {
        Section::skipped(NEEDS_CONNECTED)
    };

    let regularity = if connected {
        let report = regularity_conditions(h, &hs);
        let agree = report.agree();
        check("regularity-equivalence", agree);
        let p = hs.principal();
        check("principal-eigenvector-positive", p.simple && p.positive);
        Section::Done(RegularitySection {
            regular: report.is_regular,
            rho_equals_kd: report.rho_equals_kd,
            rho_equals_k_delta: report.rho_equals_k_delta,
            principal_uniform: report.principal_uniform,
            agree,
            tolerance: Num12::of(t.zero),
        })
    } else {
        Section::skipped(NEEDS_CONNECTED)
    };

    let greedy = greedy_min_degree_coloring(h);
    let bound = coloring_bound(&hs);
    let proper = greedy.is_proper(h);
    check("greedy-coloring-proper", proper);
    check("coloring-bound", greedy.color_count <= bound);
    let coloring = ColoringSection {
        bound,
        colors_used: greedy.color_count,
        proper,
        within_bound: greedy.color_count <= bound,
        assignment: names(&greedy.assignment),
    };

    let zero_multiplicity = spec.zero_indices().len();
    let (partition, partition_valid) = match partial_bipartition_from_kernel(h, &hs) {
        Ok(Some(p)) => (Some(PartitionCertificate::of(h, &p)), Some(true)),
        Ok(None) => (None, None),
        Err(Error::InternalConsistency(_)) => (None, Some(false)),
        Err(e) => return Err(e),
    };
    if let Some(valid) = partition_valid {
        check("zero-eigenvalue-partition", valid);
    }
    let (balanced_pattern, balanced_residual) = match detect_easy_balanced_patterns(h) {
        Some(p) => {
            let x: Vec<T> = balanced_bipartition_to_kernel(h, &p)?;
            let res = kernel_residual(&hs, &x)?;
            check("balanced-pattern-kernel", res <= T::lit(1e-8).max(t.solve));
            (Some(PartitionCertificate::of(h, &p)), Some(Num12::of(res)))
        }
        None => (None, None),
    };
    let zero_eigenvalue = ZeroSection {
        min_eigenvalue: Num12::of(spec.smallest()),
        has_zero: zero_multiplicity > 0,
        multiplicity: zero_multiplicity,
        partition,
        partition_valid,
        balanced_pattern,
        balanced_residual,
        tolerance: Num12::of(t.zero),
    };

    let distinct_vs_diameter = match distinct_eigenvalues_vs_diameter(h, &hs) {
        Ok(r) => {
            check("distinct-eigenvalues-exceed-diameter", r.holds);
            Section::Done(DistinctSection {
                distinct: r.distinct,
                diameter: r.diameter,
                holds: r.holds,
            })
        }
        Err(Error::Disconnected) => Section::skipped(NEEDS_CONNECTED),
        Err(e) => return Err(e),
    };

    let diameter_bound = match diameter_upper_bound(h, &hs) {
        Ok(b) => {
            check("diameter-upper-bound", b.holds);
            Section::Done(DiameterBoundSection {
                bound: b.bound,
                diameter: b.diameter,
                lambda1: Num12::of(b.lambda1),
                lambda2: Num12::of(b.lambda2),
                x_min: Num12::of(b.x_min),
                holds: b.holds,
            })
        }
        Err(Error::TooFewEdges) => Section::skipped("requires at least two edges"),
        Err(Error::Disconnected) => Section::skipped(NEEDS_CONNECTED),
        Err(Error::DegenerateSpectrum(..)) => Section::skipped("largest two eigenvalues coincide"),
        Err(e) => return Err(e),
    };

    let poly_identity = match verify_poly_identity_line(h, DEFAULT_ORDER_LIMIT) {
        Ok(c) => {
            check("characteristic-polynomial-identity", c.holds());
            Section::Done(c.holds())
        }
        Err(Error::OrderLimitExceeded { order, limit }) => {
            Section::Skipped(format!("skipped: order {order} exceeds limit {limit}"))
        }
        Err(e) => return Err(e),
    };

    let all_held = assertions.iter().all(|a| a.held);
    Ok(AnalysisReport {
        connected,
        components: h.components().len(),
        diameter: match h.diameter() {
            Some(dm) => Section::Done(dm),
            None => Section::skipped(NEEDS_CONNECTED),
        },
        degrees,
        spectrum: spectrum_section(h, &hs, exact_charpoly)?,
        rho: Num12::of(hs.rho()),
        edge_count_from_spectrum,
        bounds,
        regularity,
        coloring,
        zero_eigenvalue,
        distinct_vs_diameter,
        diameter_upper_bound: diameter_bound,
        poly_identity,
        assertions,
        all_held,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredictedSpectrum {
    pub eigenvalues: Vec<Num12>,
    pub multiplicities: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceRecord {
    /// Exact trace of the prediction.
    pub predicted: i64,
    /// r·m.
    pub expected: i64,
    /// Integer trace of the constructed Q.
    pub constructed: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerReport {
    pub s: usize,
    pub r: usize,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub constructed_file: String,
    pub predicted_spectrum: PredictedSpectrum,
    pub rank: usize,
    pub zero_multiplicity: usize,
    pub trace: TraceRecord,
    /// Present only when verification was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed_zero_multiplicity: Option<usize>,
    pub tolerances: ToleranceRecord,
}

pub fn power_report<T: Real>(h: &Hypergraph, params: PowerParams, tol: &Tolerances<T>, verify: bool) -> Result<PowerReport> {
    let (hp, _) = crate::power::power(h, params)?;
    let base = HypergraphSpectrum::compute(h, tol)?;
    let predicted = predict_power_spectrum(base.spectrum(), h.k(), h.m(), params)?;
    let constructed_trace = signless_laplacian(&hp)?.trace();
    let (verified, observed_zero_multiplicity) = if verify {
        let v = verify_power_spectrum(h, params, tol)?;
        (Some(v.matches && !v.zero_multiplicity_mismatch), Some(v.observed_zero_multiplicity))
    } else {
        (None, None)
    };
    Ok(PowerReport {
        s: params.s,
        r: params.r,
        k: h.k(),
        n: hp.n(),
        m: hp.m(),
        constructed_file: serialize(&hp)?,
        predicted_spectrum: PredictedSpectrum {
            eigenvalues: predicted.groups.iter().map(|g| Num12::of(g.0)).collect(),
            multiplicities: predicted.groups.iter().map(|g| g.1).collect(),
        },
        rank: predicted.rank,
        zero_multiplicity: predicted.zero_multiplicity,
        trace: TraceRecord {
            predicted: predicted.exact_trace(h.k(), base.q().trace()),
            expected: (params.r * h.m()) as i64,
            constructed: constructed_trace,
        },
        verified,
        observed_zero_multiplicity,
        tolerances: ToleranceRecord::of(base.spectrum()),
    })
}

pub fn to_json<S: Serialize>(report: &S) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse;

    fn json<S: Serialize>(r: &S) -> Value {
        serde_json::to_value(r).unwrap()
    }

    #[test]
    fn rounding() {
        assert_eq!(serde_json::to_string(&Num12(9.000000000000002)).unwrap(), "9");
        assert_eq!(serde_json::to_string(&Num12(-0.0)).unwrap(), "0");
        assert_eq!(serde_json::to_string(&Num12(-1e-17)).unwrap(), "-1e-17");
        assert_eq!(serde_json::to_string(&Num12(2.0f64.sqrt())).unwrap(), "1.41421356237");
    }

    #[test]
    fn spectrum_of_complete_3_graph() {
        let h = parse("1 2 3\n1 2 4\n1 3 4\n2 3 4\n").unwrap();
        let r = json(&spectrum_report(&h, &Tolerances::<f64>::default(), true).unwrap());
        assert_eq!(r["eigenvalues"], serde_json::json!([9, 1]));
        assert_eq!(r["multiplicities"], serde_json::json!([1, 3]));
        assert_eq!(r["charpoly"], serde_json::json!([1, -12, 30, -28, 9]));
        assert_eq!(r["rho"], 9);
    }

    #[test]
    fn spectrum_small_cases() {
        let tol = Tolerances::<f64>::default();
        let r = json(&spectrum_report(&parse("a b c d").unwrap(), &tol, false).unwrap());
        assert_eq!(r["eigenvalues"], serde_json::json!([4, 0]));
        assert_eq!(r["multiplicities"], serde_json::json!([1, 3]));
        assert!(r.get("charpoly").is_none());
        let r = json(&spectrum_report(&parse("1 2\n2 3").unwrap(), &tol, false).unwrap());
        assert_eq!(r["eigenvalues"], serde_json::json!([3, 1, 0]));
    }

    #[test]
    fn analysis_of_complete_3_graph() {
        let h = parse("1 2 3\n1 2 4\n1 3 4\n2 3 4\n").unwrap();
        let r = analyze(&h, &Tolerances::<f64>::default(), false).unwrap();
        assert!(r.all_held, "{:?}", r.first_failed());
        let v = json(&r);
        assert_eq!(v["regularity"]["regular"], true);
        assert_eq!(v["coloring"]["bound"], 4);
        assert_eq!(v["diameter"], 1);
        assert_eq!(v["distinct_vs_diameter"]["distinct"], 2);
        assert_eq!(v["diameter_upper_bound"]["bound"], 1);
    }

    #[test]
    fn analysis_of_irregular_example() {
        let h = parse("1 2 3\n1 4 5\n3 4 5").unwrap();
        let r = analyze(&h, &Tolerances::<f64>::default(), false).unwrap();
        assert!(r.all_held);
        assert!(!r.regularity.done().unwrap().regular);
        let rho = r.rho.0;
        assert!((5.0..=6.0).contains(&rho));
    }

    #[test]
    fn analysis_of_disconnected() {
        let h = parse("1 2\n3 4").unwrap();
        let r = analyze(&h, &Tolerances::<f64>::default(), false).unwrap();
        assert!(r.all_held);
        let v = json(&r);
        for key in ["bounds", "regularity", "distinct_vs_diameter", "diameter_upper_bound", "diameter"] {
            assert_eq!(v[key], "skipped: requires connectivity", "{key}");
        }
        assert_eq!(v["zero_eigenvalue"]["multiplicity"], 2);
    }

    #[test]
    fn power_reports() {
        let tol = Tolerances::<f64>::default();
        let r = power_report(&parse("1 2\n2 3").unwrap(), PowerParams::lift(3), &tol, true).unwrap();
        assert_eq!(r.verified, Some(true));
        let v = json(&r);
        assert_eq!(v["predicted_spectrum"]["eigenvalues"], serde_json::json!([4, 2, 0]));
        assert_eq!(v["predicted_spectrum"]["multiplicities"], serde_json::json!([1, 1, 3]));
        assert_eq!(r.trace.predicted, 6);
        assert_eq!(r.trace.constructed, 6);
        assert_eq!(r.constructed_file, "k 3\n1 2 e1@1\n2 3 e2@1\n");

        let c4 = parse("1 2\n2 3\n3 4\n4 1").unwrap();
        let v = json(&power_report(&c4, PowerParams::lift(3), &tol, false).unwrap());
        assert_eq!(v["predicted_spectrum"]["eigenvalues"], serde_json::json!([5, 3, 1, 0]));
        assert_eq!(v["predicted_spectrum"]["multiplicities"], serde_json::json!([1, 2, 1, 4]));
        assert!(v.get("verified").is_none());

        let same = power_report(&c4, PowerParams::lift(2), &tol, false).unwrap();
        let base = spectrum_report(&c4, &tol, false).unwrap();
        assert_eq!(same.predicted_spectrum.eigenvalues, base.eigenvalues);
        assert_eq!(same.predicted_spectrum.multiplicities, base.multiplicities);
    }
}
