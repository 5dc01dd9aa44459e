use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::efree::GradedMap;
use crate::eres::RegularityOptions;
use crate::error::{Error, Result};
use crate::extalg::{AlgebraContext, ExtElement, ExtMonomial};
use crate::tate::{descent, CohomologyTable};

use super::{membership_x0, reconstruct, sample, sheaf_regularity, z_profile, TypeVectors};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusParams {
    pub b: Vec<usize>,
    pub bprime: Vec<usize>,
    pub n: usize,
    pub p: u32,
    pub trials: usize,
    pub seed: Option<u64>,
    pub window: (i32, i32),
}

/// Outcome counts over a batch of points. Uncertified regularity results are
/// tallied apart and never counted as members or non-members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusReport {
    pub params: CensusParams,
    pub members: usize,
    pub non_members: usize,
    pub uncertified: usize,
    /// Members whose `phi^dual` is not a minimal presentation, so that the
    /// rebuilt sheaf has a smaller type.
    pub non_minimal_presentation: usize,
    pub distinct_tables: Vec<CohomologyTable>,
    pub max_regularity: Option<i32>,
    pub max_descent_dim: Option<usize>,
    /// For each `i`, the number of certified points in `Z_i`.
    pub z_histogram: BTreeMap<usize, usize>,
}

enum Outcome {
    Uncertified,
    NonMember { z: Vec<bool> },
    NonMinimal { z: Vec<bool> },
    Member { table: CohomologyTable, regularity: Option<i32>, descent: Option<usize>, z: Vec<bool> },
}

fn z_range(t: &TypeVectors) -> std::ops::RangeInclusive<usize> {
    2..=t.s() + 2
}

fn examine(t: &TypeVectors, phi: &GradedMap, window: (i32, i32), opts: RegularityOptions) -> Result<Outcome> {
    let m = membership_x0(phi, opts)?;
    if !m.certified {
        return Ok(Outcome::Uncertified);
    }
    let z = z_profile(t, phi, z_range(t));
    if !m.member {
        return Ok(Outcome::NonMember { z });
    }
    match reconstruct(t, phi, window.0, window.1, opts) {
        Ok((w, table)) => {
            let regularity = sheaf_regularity(&table);
            let from = regularity.unwrap_or(w.lo()).max(0);
            let descent = match descent(&w, from) {
                Ok((n0, _)) => Some(n0),
                Err(Error::NoLinearDifferential { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(Outcome::Member { table, regularity, descent, z })
        }
        Err(Error::TypeMismatch { .. }) => Ok(Outcome::NonMinimal { z }),
        Err(e) => Err(e),
    }
}

fn summarize(params: CensusParams, t: &TypeVectors, outcomes: Vec<Outcome>) -> CensusReport {
    let mut report = CensusReport {
        params,
        members: 0,
        non_members: 0,
        uncertified: 0,
        non_minimal_presentation: 0,
        distinct_tables: Vec::new(),
        max_regularity: None,
        max_descent_dim: None,
        z_histogram: z_range(t).map(|i| (i, 0)).collect(),
    };
    let mut tables = BTreeSet::new();
    let tally = |z: &[bool], hist: &mut BTreeMap<usize, usize>| {
        for (i, &hit) in z_range(t).zip(z) {
            if hit {
                *hist.get_mut(&i).unwrap() += 1;
            }
        }
    };
    for o in outcomes {
        match o {
            Outcome::Uncertified => report.uncertified += 1,
            Outcome::NonMember { z } => {
                report.non_members += 1;
                tally(&z, &mut report.z_histogram);
            }
            Outcome::NonMinimal { z } => {
                report.members += 1;
                report.non_minimal_presentation += 1;
                tally(&z, &mut report.z_histogram);
            }
            Outcome::Member { table, regularity, descent, z } => {
                report.members += 1;
                tally(&z, &mut report.z_histogram);
                report.max_regularity = report.max_regularity.max(regularity);
                report.max_descent_dim = report.max_descent_dim.max(descent);
                tables.insert(table);
            }
        }
    }
    report.distinct_tables = tables.into_iter().collect();
    report
}

/// Samples `trials` points of type `t` over `n + 1` variables. Trial `k`
/// draws from stream `k` of the generator seeded with `seed`, so the report
/// depends only on the arguments.
pub fn census(
    t: &TypeVectors,
    ctx: &AlgebraContext,
    trials: usize,
    window: (i32, i32),
    seed: u64,
    opts: RegularityOptions,
) -> Result<CensusReport> {
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let phi = sample(t, ctx, &mut rng)?;
            examine(t, &phi, window, opts)
        })
        .collect::<Result<Vec<_>>>()?;
    let params = CensusParams {
        b: t.b.clone(),
        bprime: t.bprime.clone(),
        n: ctx.n(),
        p: ctx.field().p(),
        trials,
        seed: Some(seed),
        window,
    };
    Ok(summarize(params, t, outcomes))
}

/// Runs every point of type `t` when there are at most `limit` of them.
pub fn census_exhaustive(
    t: &TypeVectors,
    ctx: &AlgebraContext,
    window: (i32, i32),
    limit: usize,
    opts: RegularityOptions,
) -> Result<CensusReport> {
    let (src, tgt) = t.free_modules(ctx);
    let vars = ctx.vars() as i32;
    let p = ctx.field().p() as usize;
    // (row, col, monomials) for every free slot.
    let slots: Vec<(usize, usize, i32, &[u32])> = tgt
        .degrees()
        .iter()
        .enumerate()
        .flat_map(|(r, &rd)| {
            src.degrees().iter().enumerate().filter_map(move |(c, &cd)| {
                let deg = cd - rd;
                (deg < 0 && deg >= -vars).then_some((r, c, deg))
            })
        })
        .map(|(r, c, deg)| (r, c, deg, ctx.monomials((-deg) as usize)))
        .collect();
    let coords: usize = slots.iter().map(|s| s.3.len()).sum();
    let total = (0..coords).try_fold(1usize, |acc, _| acc.checked_mul(p).filter(|&v| v <= limit));
    let Some(total) = total else {
        return Err(Error::Invalid(format!("more than {limit} points to enumerate")));
    };
    let outcomes = (0..total)
        .into_par_iter()
        .map(|mut code| {
            let mut entries: Vec<Vec<ExtElement>> = tgt
                .degrees()
                .iter()
                .map(|&r| src.degrees().iter().map(|&c| ExtElement::zero(c - r)).collect())
                .collect();
            for &(r, c, deg, monos) in &slots {
                let terms: Vec<(ExtMonomial, u32)> = monos
                    .iter()
                    .map(|&m| {
                        let coef = (code % p) as u32;
                        code /= p;
                        (ExtMonomial(m), coef)
                    })
                    .collect();
                entries[r][c] = ExtElement::from_terms(ctx.field(), deg, terms)?;
            }
            let phi = GradedMap::new(src.clone(), tgt.clone(), entries)?;
            examine(t, &phi, window, opts)
        })
        .collect::<Result<Vec<_>>>()?;
    let params = CensusParams {
        b: t.b.clone(),
        bprime: t.bprime.clone(),
        n: ctx.n(),
        p: ctx.field().p(),
        trials: total,
        seed: None,
        window,
    };
    Ok(summarize(params, t, outcomes))
}
