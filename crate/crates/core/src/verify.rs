//! Theorem- and table-level verification pipelines producing structured
//! machine-checkable reports.

use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebraic::AlgebraicReal;
use crate::dataset::TableRow;
use crate::error::{Error, Result};
use crate::graphspec::{realize_starlike, StarlikeTree};
use crate::homology::{self, family_twist_word, homological_stretch, SymplecticAction, TwistWord};
use crate::intpoly::{salem_family_poly, salem_family_q_poly, IntPoly};
use crate::modulus::MaxModulus;
use crate::numfmt::{format_decimals, parse_decimal};
use crate::powerpoly::power_min_poly;
use crate::rootloc::{
    classify_number, prove_irreducible_one_big_root, IrreducibilityVerdict, NumberClass,
};
use crate::thurston::{classify_word_with, parse_word, standard_system, IsotopyClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Diagnostic,
}

/// Structured result of one verification job. Everything except `wall_ms`
/// is a deterministic function of the inputs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub inputs: Vec<(String, String)>,
    pub verdict: Verdict,
    pub witnesses: Vec<(String, String)>,
    pub wall_ms: u128,
}

impl VerificationReport {
    fn start(id: impl Into<String>) -> ReportBuilder {
        ReportBuilder {
            id: id.into(),
            inputs: Vec::new(),
            witnesses: Vec::new(),
            started: Instant::now(),
            failed: false,
            inconclusive: false,
        }
    }
}

struct ReportBuilder {
    id: String,
    inputs: Vec<(String, String)>,
    witnesses: Vec<(String, String)>,
    started: Instant,
    failed: bool,
    inconclusive: bool,
}

impl ReportBuilder {
    fn input(&mut self, k: &str, v: impl ToString) -> &mut Self {
        self.inputs.push((k.into(), v.to_string()));
        self
    }

    fn witness(&mut self, k: impl Into<String>, v: impl ToString) -> &mut Self {
        self.witnesses.push((k.into(), v.to_string()));
        self
    }

    fn require(&mut self, label: &str, ok: bool) -> bool {
        self.witnesses.push((
            label.into(),
            if ok {
                "ok".into()
            } else {
                "FAILED".to_string()
            },
        ));
        if !ok {
            self.failed = true;
        }
        ok
    }

    fn mark_inconclusive(&mut self, label: &str, detail: impl ToString) {
        self.witnesses.push((label.into(), detail.to_string()));
        self.inconclusive = true;
    }

    fn finish(self) -> VerificationReport {
        let verdict = if self.failed {
            Verdict::Fail
        } else if self.inconclusive {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        };
        VerificationReport {
            id: self.id,
            inputs: self.inputs,
            verdict,
            witnesses: self.witnesses,
            wall_ms: self.started.elapsed().as_millis(),
        }
    }
}

/// The canonical degree-2g polynomial of the tree path: `x^g c(x + 1/x + 2)`
/// for `c` the characteristic polynomial of `N N^t` over the smaller class
/// of the bipartition of `T(2g-2, k*1)`.
pub fn tree_path_polynomial(g: u32, k: u32) -> Result<IntPoly> {
    let t = StarlikeTree::long_arm_with_unit_arms(2 * g as usize - 2, k as usize)?;
    let graph = realize_starlike(&t);
    let n = graph
        .bipartite_matrix()
        .ok_or_else(|| Error::DegenerateInput("tree must be bipartite".into()))?;
    let gram = n.mul(&n.transpose());
    gram.charpoly().compose_x_plus_inv_plus_two()
}

/// The canonical degree-2g polynomial of the homology path: the
/// characteristic polynomial of the family action, reflected back through
/// `x -> -x` (the action realizes the family polynomial up to that sign
/// substitution).
pub fn homology_path_polynomial(g: u32, k: u32) -> Result<IntPoly> {
    let word = family_twist_word(g as usize, k as usize)?;
    let act = homology::action(&word)?;
    Ok(homology::char_poly(&act).substitute_neg_x())
}

/// Theorem-level check for one `(g, k)`: the word is pseudo-Anosov; the
/// Thurston, tree, and homology paths all produce the family polynomial
/// exactly; the polynomial is Salem-patterned; and the homological stretch
/// is the same algebraic number as the geometric one.
pub fn verify_theorem_a(g: u32, k: u32) -> Result<VerificationReport> {
    if g < 2 || k < 3 {
        return Err(Error::OutOfRange(format!(
            "theorem-a needs g >= 2 and k >= 3, got g={g}, k={k}"
        )));
    }
    let mut rep = VerificationReport::start(format!("theorem-a/g{g}k{k}"));
    rep.input("g", g).input("k", k);

    let family = salem_family_poly(g, k)?;
    rep.witness("family_polynomial", family.to_csv());

    let sys = standard_system(g, k)?;
    let spectrum = crate::thurston::analyze(&sys)?;
    let word = parse_word("AB")?;
    let cls = classify_word_with(&spectrum, &word)?;
    rep.require(
        "word_is_pseudo_anosov",
        cls.tag == IsotopyClass::PseudoAnosov,
    );

    let thurston_poly = spectrum.modulus.compose_x_plus_inv_plus_two()?;
    rep.require("thurston_path_polynomial", thurston_poly == family);

    let tree_poly = tree_path_polynomial(g, k)?;
    rep.require("tree_path_polynomial", tree_poly == family);

    let homology_poly = homology_path_polynomial(g, k)?;
    rep.require("homology_path_polynomial", homology_poly == family);

    let classification = classify_number(&family)?;
    rep.require(
        "family_is_salem",
        classification.class == NumberClass::Salem,
    );
    rep.witness(
        "root_location",
        format!(
            "inside={} on={} outside={}",
            classification.location.inside,
            classification.location.on,
            classification.location.outside
        ),
    );

    // lambda = lambda_H as exact algebraic numbers.
    let geometric = cls.stretch.ok_or_else(|| {
        Error::Inconclusive("pseudo-Anosov classification carried no stretch".into())
    })?;
    let act = homology::action(&family_twist_word(g as usize, k as usize)?)?;
    match homological_stretch(&act)? {
        MaxModulus::Real(hom) => {
            rep.require(
                "homological_stretch_defining",
                hom.defining() == &family.square_free_part()?,
            );
            rep.require(
                "stretch_equals_homological_stretch",
                geometric.cmp(&hom) == Ordering::Equal,
            );
            rep.witness("lambda", format_decimals(&hom.approx(6), 6));
        }
        MaxModulus::Enclosure { lo, hi } => {
            rep.mark_inconclusive(
                "homological_stretch",
                format!("not separated as a real eigenvalue: ({lo}, {hi}]"),
            );
        }
    }
    Ok(rep.finish())
}

/// Irreducibility of the k = 4 family polynomials for every genus up to
/// `g_max`: one root outside, unit constant term, empty cyclotomic scan.
pub fn verify_theorem_b(g_max: u32) -> Result<VerificationReport> {
    if g_max < 2 {
        return Err(Error::OutOfRange("theorem-b needs g_max >= 2".into()));
    }
    let mut rep = VerificationReport::start(format!("theorem-b/gmax{g_max}"));
    rep.input("g_max", g_max);
    for g in 2..=g_max {
        let p = salem_family_poly(g, 4)?;
        let cert = prove_irreducible_one_big_root(&p)?;
        let ok = cert.verdict == IrreducibilityVerdict::Proven;
        rep.require(&format!("g{g}_irreducible"), ok);
        rep.witness(
            format!("g{g}_certificate"),
            format!(
                "degree={} outside={} |constant|={} cyclotomic={:?}",
                p.degree(),
                cert.outside_count,
                cert.constant_abs,
                cert.cyclotomic_indices
            ),
        );
        let cls = classify_number(&p)?;
        rep.require(&format!("g{g}_salem"), cls.class == NumberClass::Salem);
    }
    Ok(rep.finish())
}

/// Exact sign certificate that the family stretch factor lies in
/// `(k - 1 - delta, k - 1)`: `q(k-1) > 0 > q(k-1-delta)` for
/// `q = (x-1) p_{g,k}`. A `Fail` verdict means the genus is too small for
/// the requested delta, not a theorem violation.
pub fn verify_limit(k: u32, delta: &BigRational, g: u32) -> Result<VerificationReport> {
    if k < 3 || g < 2 {
        return Err(Error::OutOfRange("limit check needs k >= 3, g >= 2".into()));
    }
    if delta <= &BigRational::from(BigInt::from(0)) || delta >= &BigRational::one() {
        return Err(Error::OutOfRange("delta must be in (0, 1)".into()));
    }
    let mut rep = VerificationReport::start(format!("limit/k{k}g{g}"));
    rep.input("k", k).input("g", g).input("delta", delta);
    let q = salem_family_q_poly(g, k)?;
    let at = BigRational::from(BigInt::from(k as i64 - 1));
    let sign_top = q.sign_at(&at);
    let shifted = &at - delta;
    let sign_bottom = q.sign_at(&shifted);
    rep.witness("q_at_k_minus_1_sign", sign_top)
        .witness("q_at_k_minus_1_minus_delta_sign", sign_bottom);
    rep.require("root_bracketed", sign_top > 0 && sign_bottom < 0);
    if sign_top > 0 && sign_bottom < 0 {
        rep.witness("certified_interval", format!("lambda in ({shifted}, {at})"));
    }
    Ok(rep.finish())
}

/// Degree realization through powers: for each `h <= g/2` the degree-2h
/// Salem (or quadratic) polynomial keeps degree 2h and the one-big-root
/// certificate for every exponent `k <= k_max`; for `h >= 2` the power stays
/// Salem.
pub fn verify_cover_degrees(g: u32, k_max: u32) -> Result<VerificationReport> {
    if g < 2 {
        return Err(Error::OutOfRange("cover check needs g >= 2".into()));
    }
    let k_max = k_max.max(1);
    let mut rep = VerificationReport::start(format!("covers/g{g}"));
    rep.input("g", g).input("k_max", k_max);
    for h in 1..=(g / 2).max(1) {
        if h > g / 2 {
            break;
        }
        let base = if h == 1 {
            IntPoly::from_i64(&[1, -3, 1])
        } else {
            salem_family_poly(h, 4)?
        };
        for k in 1..=k_max {
            let powered = power_min_poly(&base, k)?;
            let tag = format!("h{h}_k{k}");
            rep.require(&format!("{tag}_degree"), powered.degree() == 2 * h as usize);
            let cert = prove_irreducible_one_big_root(&powered)?;
            rep.require(
                &format!("{tag}_irreducible"),
                cert.verdict == IrreducibilityVerdict::Proven,
            );
            if h >= 2 {
                let cls = classify_number(&powered)?;
                rep.require(&format!("{tag}_salem"), cls.class == NumberClass::Salem);
            }
        }
    }
    Ok(rep.finish())
}

/// Tolerance for matching a three-decimal table value: half a unit in the
/// last printed place.
fn lambda_tolerance() -> BigRational {
    BigRational::new(BigInt::from(5), BigInt::from(10_000))
}

/// Per-row checks over a dataset of published example rows:
/// (a) degree column matches the printed polynomial and the largest real
///     root matches the printed three-decimal stretch value;
/// (b) no cyclotomic factors, with the one-big-root certificate when it
///     applies;
/// (c) the parity obstruction: degree > 3g-3 forces even degree;
/// (d) degree-3 rows are Pisot;
/// (e) diagnostic only: the homological stretch of the word under the fixed
///     table classes does not exceed the printed stretch value.
pub fn verify_tables(rows: &[TableRow]) -> Result<VerificationReport> {
    let mut rep = VerificationReport::start("tables");
    rep.input("rows", rows.len());
    for row in rows {
        let tag = format!("t{}deg{}", row.table, row.degree);
        // (c) parity obstruction needs only the degree columns.
        let long_bound = 3 * row.genus as usize - 3;
        rep.require(
            &format!("{tag}_parity_obstruction"),
            !(row.degree > long_bound && row.degree % 2 == 1),
        );
        let Some(minpoly) = row.minpoly_parsed()? else {
            // (e) still runs as a diagnostic when lambda is absent? No:
            // nothing further to check without published data.
            continue;
        };
        // (a) degree and printed stretch value.
        rep.require(
            &format!("{tag}_degree_column"),
            minpoly.degree() == row.degree,
        );
        let lambda_txt = row.lambda.as_ref().ok_or_else(|| {
            Error::InputError(format!("row {tag} has a polynomial but no stretch value"))
        })?;
        let lambda = parse_decimal(lambda_txt)?;
        let largest = AlgebraicReal::largest_root(&minpoly)?;
        let approx = largest.approx(7);
        let diff = if approx > lambda {
            &approx - &lambda
        } else {
            &lambda - &approx
        };
        let ok = diff <= lambda_tolerance();
        rep.require(&format!("{tag}_lambda_column"), ok);
        if !ok {
            rep.witness(format!("{tag}_largest_root"), format_decimals(&approx, 4));
        }
        // (b) cyclotomic scan and the certificate when it applies.
        let cert = prove_irreducible_one_big_root(&minpoly)?;
        rep.require(
            &format!("{tag}_cyclotomic_free"),
            cert.cyclotomic_indices.is_empty(),
        );
        if cert.outside_count == 1 {
            rep.require(
                &format!("{tag}_irreducible"),
                cert.verdict == IrreducibilityVerdict::Proven,
            );
        }
        // (d) degree-3 rows are Pisot.
        if row.degree == 3 {
            let cls = classify_number(&minpoly)?;
            rep.require(&format!("{tag}_pisot"), cls.class == NumberClass::Pisot);
        }
        // (e) diagnostic bound lambda_H <= lambda + 1e-9.
        match table_row_homological_stretch(row) {
            Ok(bound) => {
                // The printed stretch is 3-decimal, so allow the half-ulp
                // print slack on top of the 1e-9 bound.
                let tol = &lambda
                    + lambda_tolerance()
                    + BigRational::new(BigInt::one(), BigInt::from(1_000_000_000i64));
                let upper = bound.upper_bound(&BigRational::new(
                    BigInt::one(),
                    BigInt::from(1_000_000_000i64),
                ));
                let status = if upper <= tol {
                    "ok".to_string()
                } else {
                    format!(
                        "bound {} above table value (diagnostic)",
                        format_decimals(&upper, 4)
                    )
                };
                rep.witness(format!("{tag}_homology_diagnostic"), status);
            }
            Err(e) => {
                rep.witness(
                    format!("{tag}_homology_diagnostic"),
                    format!("skipped: {e}"),
                );
            }
        }
    }
    Ok(rep.finish())
}

/// Homological stretch of a published word under the fixed table classes.
pub fn table_row_homological_stretch(row: &TableRow) -> Result<MaxModulus> {
    let word = TwistWord::parse(&row.word, row.genus as usize)?;
    let act: SymplecticAction = homology::xtrain_action(&word)?;
    homological_stretch(&act)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::bundled_tables;

    #[test]
    fn theorem_a_small_cases() {
        for (g, k) in [(2u32, 4u32), (2, 3), (3, 4)] {
            let rep = verify_theorem_a(g, k).unwrap();
            assert_eq!(
                rep.verdict,
                Verdict::Pass,
                "g={g} k={k}: {:?}",
                rep.witnesses
            );
        }
        assert!(verify_theorem_a(2, 2).is_err());
    }

    #[test]
    fn theorem_a_with_reducible_family_column() {
        // g = 4, k = 3 has a cyclotomic factor inside the family polynomial;
        // the three paths still agree on the full degree-8 polynomial.
        let rep = verify_theorem_a(4, 3).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{:?}", rep.witnesses);
    }

    #[test]
    fn theorem_b_small_range() {
        let rep = verify_theorem_b(4).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{:?}", rep.witnesses);
    }

    #[test]
    fn limit_certificates() {
        let rep = verify_limit(4, &parse_decimal("1e-3").unwrap(), 10).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{:?}", rep.witnesses);
        // Small genus with a generous delta also passes by direct evaluation.
        let rep = verify_limit(3, &parse_decimal("0.5").unwrap(), 2).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{:?}", rep.witnesses);
        // Tiny delta at tiny genus fails honestly (genus too small).
        let rep = verify_limit(3, &parse_decimal("1e-6").unwrap(), 2).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
    }

    #[test]
    fn cover_degrees_small() {
        let rep = verify_cover_degrees(4, 3).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{:?}", rep.witnesses);
    }

    #[test]
    fn tables_report_known_discrepancy() {
        let rows = bundled_tables();
        let rep = verify_tables(&rows).unwrap();
        // Exact verification exposes three defective cells in the second
        // published table: the deg-4 stretch value belongs to a different
        // polynomial (largest root is 2.0810), the deg-8 value 1.809 is a
        // truncation of 1.80979 (outside the half-ulp tolerance), and the
        // deg-12 "minimal polynomial" is divisible by Phi_4, hence
        // reducible.
        let failures: Vec<&str> = rep
            .witnesses
            .iter()
            .filter(|(_, v)| v == "FAILED")
            .map(|(k, _)| k.as_str())
            .collect();
        assert_eq!(
            failures,
            vec![
                "t2deg4_lambda_column",
                "t2deg8_lambda_column",
                "t2deg12_cyclotomic_free",
                "t2deg12_irreducible",
            ],
            "verifier must isolate exactly the defective cells"
        );
        assert_eq!(rep.verdict, Verdict::Fail);
    }

    #[test]
    fn tables_pass_when_inconsistent_row_is_corrected() {
        // Sanity check of the pipeline itself: with the inconsistent cell
        // replaced by the polynomial's actual largest root, everything
        // passes.
        let mut rows = bundled_tables();
        for row in &mut rows {
            if row.table == 2 && row.degree == 4 {
                row.lambda = Some("2.081".into());
            }
            if row.table == 2 && row.degree == 8 {
                row.lambda = Some("1.810".into());
            }
            if row.table == 2 && row.degree == 12 {
                // The printed polynomial carries a Phi_4 factor; drop the
                // published data and keep the word-only checks.
                row.minpoly = None;
                row.lambda = None;
            }
        }
        let rep = verify_tables(&rows).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{:?}", rep.witnesses);
    }
}
