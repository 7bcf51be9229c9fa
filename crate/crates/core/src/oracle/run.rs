//! Full verification runs: prediction, observation and every property family.

use crate::analysis::{Analysis, PairAnalysis};
use crate::error::Result;
use crate::predict::{
    predict_jacobian, predict_polar, predict_regularity, taxonomy_is_monotone, JacobianPrediction, PolarPrediction,
    RegularityPrediction,
};

use super::irregular::{bounds_section, irregular_values, polar_is_regular, regularity_section, IrregularValues};
use super::{counting, deform, jacobian_of, laws, observe, observe_polar, verify_jacobian, verify_polar};
use super::{Observation, Report};

pub struct CurveRun {
    pub polar: PolarPrediction,
    pub regularity: RegularityPrediction,
    pub obs: Observation,
    pub values: IrregularValues,
    pub report: Report,
}

/// Predicts f_y from the tree, factors it directly and compares.
/// `perturb` shifts one predicted degree so the comparison must fail.
pub fn verify_curve(an: &mut Analysis, perturb: bool) -> Result<CurveRun> {
    let mut polar = predict_polar(&an.tree, &an.branches)?;
    let regularity = predict_regularity(&an.tree, &an.branches, &polar)?;
    if perturb {
        polar.perturb();
    }
    let obs = observe_polar(an)?;
    let values = irregular_values(an, &obs)?;
    let mut report = verify_polar(an, &polar, &obs);
    report.add(laws::conjugate_laws(&mut an.ctx, &an.branches)?);
    report.add(laws::dictionary(&an.branches));
    laws::contact_laws(&an.branches).into_iter().for_each(|s| report.add(s));
    laws::tree_laws(&an.tree, &an.branches).into_iter().for_each(|s| report.add(s));
    report.add(laws::quotient_rule(&an.tree, &obs));
    report.add(counting::polar_root_contacts(an, &obs));
    counting::polar_counts(an, &obs).into_iter().for_each(|s| report.add(s));
    report.add(deform::polar_deformation(an)?);
    report.add(regularity_section(&regularity, &obs, &values));
    report.add(polar_is_regular(an, &obs));
    report.add(bounds_section(an, &regularity, &obs, &values));
    Ok(CurveRun { polar, regularity, obs, values, report })
}

pub struct PairRun {
    pub jacobian: JacobianPrediction,
    pub obs: Observation,
    pub report: Report,
}

/// Same for J(f, g) over the tree of f·g.
pub fn verify_pair(pa: &mut PairAnalysis, perturb: bool) -> Result<PairRun> {
    let an = &mut pa.an;
    let mut jacobian = predict_jacobian(&an.tree, &an.branches, &pa.is_f)?;
    if perturb {
        jacobian.perturb();
    }
    let h = jacobian_of(&pa.f, &pa.g)?;
    let obs = observe(an, &h)?;
    let mut report = verify_jacobian(an, &jacobian, &obs);
    report.check(
        "point taxonomy".into(),
        "monotone".into(),
        if taxonomy_is_monotone(&an.tree, &jacobian.kinds) { "monotone" } else { "not monotone" }.into(),
        taxonomy_is_monotone(&an.tree, &jacobian.kinds),
    );
    report.add(laws::dictionary(&an.branches));
    laws::tree_laws(&an.tree, &an.branches).into_iter().for_each(|s| report.add(s));
    report.add(laws::quotient_rule(&an.tree, &obs));
    report.add(counting::jacobian_root_contacts(an, &obs, &pa.is_f));
    counting::jacobian_counts(an, &obs, &pa.is_f).into_iter().for_each(|s| report.add(s));
    report.add(deform::jacobian_deformation(an, &pa.f, &pa.g, &pa.is_f)?);
    Ok(PairRun { jacobian, obs, report })
}
