//! Data-parallel evaluation of independent workloads: profile batches,
//! relation sweeps, and symmetric-power batches. Everything in this crate is
//! pure and immutable, so items are embarrassingly parallel.
//!
//! With the `parallel` feature (on by default) the batch entry points run on
//! rayon; without it they fall back to the sequential implementations, which
//! are also exported directly for comparison benchmarks.

use crate::classify::{classify_profile, ClassifyOptions, VarietyProfile, Verdict};
use crate::fano::{solve_fano_poincare, FanoReport};
use crate::motivic::{symmetric_powers, MotivicClass};
use crate::poly::UniPoly;
use crate::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item, in parallel when the feature allows.
pub fn map_batch<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Sequential twin of [`map_batch`], always available.
pub fn map_batch_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

pub fn fano_reports(inputs: &[(UniPoly, u32)]) -> Vec<Result<FanoReport>> {
    map_batch(inputs, |(p, m)| solve_fano_poincare(p, *m))
}

pub fn fano_reports_seq(inputs: &[(UniPoly, u32)]) -> Vec<Result<FanoReport>> {
    map_batch_seq(inputs, |(p, m)| solve_fano_poincare(p, *m))
}

pub fn classify_profiles(profiles: &[(VarietyProfile, ClassifyOptions)]) -> Vec<Verdict> {
    map_batch(profiles, |(p, o)| classify_profile(p, o))
}

pub fn classify_profiles_seq(profiles: &[(VarietyProfile, ClassifyOptions)]) -> Vec<Verdict> {
    map_batch_seq(profiles, |(p, o)| classify_profile(p, o))
}

pub fn symmetric_power_batch(
    classes: &[MotivicClass],
    order: u32,
) -> Vec<Result<Vec<MotivicClass>>> {
    map_batch(classes, |c| symmetric_powers(c, order))
}

pub fn symmetric_power_batch_seq(
    classes: &[MotivicClass],
    order: u32,
) -> Vec<Result<Vec<MotivicClass>>> {
    map_batch_seq(classes, |c| symmetric_powers(c, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn sample_inputs() -> Vec<(UniPoly, u32)> {
        (2..=8u32)
            .map(|m| {
                let mut p = UniPoly::one();
                p.add_term(2, rat((m % 5) as i64));
                p.add_term(2 * m, rat(1));
                (p, m)
            })
            .collect()
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let inputs = sample_inputs();
        let par: Vec<String> = fano_reports(&inputs)
            .into_iter()
            .map(|r| format!("{r:?}"))
            .collect();
        let seq: Vec<String> = fano_reports_seq(&inputs)
            .into_iter()
            .map(|r| format!("{r:?}"))
            .collect();
        assert_eq!(par, seq);

        let classes: Vec<MotivicClass> = (0..16)
            .map(|i| MotivicClass::parse(&format!("1 + {}L + L^2", i % 7)).unwrap())
            .collect();
        let par = symmetric_power_batch(&classes, 4);
        let seq = symmetric_power_batch_seq(&classes, 4);
        assert_eq!(
            par.iter().map(|r| r.as_ref().unwrap()).collect::<Vec<_>>(),
            seq.iter().map(|r| r.as_ref().unwrap()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn ordering_is_input_order() {
        let inputs = sample_inputs();
        let reports = fano_reports(&inputs);
        assert_eq!(reports.len(), inputs.len());
        for ((p, m), r) in inputs.iter().zip(&reports) {
            let direct = solve_fano_poincare(p, *m);
            assert_eq!(format!("{direct:?}"), format!("{:?}", r));
        }
    }
}
