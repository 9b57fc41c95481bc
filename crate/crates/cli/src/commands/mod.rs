pub mod cartan;
pub mod divergence;
pub mod domain;
pub mod gens;
pub mod limitset;
pub mod orbits;
pub mod satake;
pub mod table1;

use ano_limits::{sample_limit_set, LimitSample};
use ano_linalg::Strategy;
use ano_roots::ThetaSet;
use ano_words::{enumerate_ball, GroupBall, WordsError};

use crate::config::RunConfig;
use crate::output::ErrorRecord;
use crate::Result;

/// Enumerates the ball; hitting the cap keeps the truncated ball and records an error.
pub(crate) fn ball(cfg: &RunConfig, errors: &mut Vec<ErrorRecord>) -> Result<GroupBall> {
    let gens = crate::output::load_generators(&cfg.gens)?;
    match enumerate_ball(&gens, cfg.radius, cfg.dedup_tol, cfg.cap, Strategy::default()) {
        Ok(b) => Ok(b),
        Err(WordsError::CapExceeded { cap, radius, partial }) => {
            errors.push(ErrorRecord::new("ball", format!("cap {cap} reached at radius {radius}; ball truncated")));
            Ok(*partial)
        }
        Err(e) => Err(e.into()),
    }
}

pub(crate) fn limit_sample(cfg: &RunConfig, ball: &GroupBall) -> Result<LimitSample> {
    let group = cfg.group()?;
    let rank = group.root_system()?.rank();
    let theta = ThetaSet::from_labels(rank, [cfg.root])?;
    Ok(sample_limit_set(ball, &group, &theta, cfg.min_gap, cfg.merge_tol, Strategy::default())?)
}
