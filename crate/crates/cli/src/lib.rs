//! Library side of `anoctl`: configuration, commands and report emission.

pub mod commands;
pub mod config;
mod error;
pub mod output;

pub use config::{CommandKind, FormSpec, RunConfig};
pub use error::CliError;
pub use output::{Outcome, SCHEMA_VERSION};

pub type Result<T> = std::result::Result<T, CliError>;

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    match cfg.command {
        CommandKind::Cartan => commands::cartan::run(cfg),
        CommandKind::Divergence => commands::divergence::run(cfg),
        CommandKind::Limitset => commands::limitset::run(cfg),
        CommandKind::Domain => commands::domain::run(cfg),
        CommandKind::Orbits => commands::orbits::run(cfg),
        CommandKind::Table1 => commands::table1::run(cfg),
        CommandKind::Satake => commands::satake::run(cfg),
        CommandKind::Gens => commands::gens::run(cfg),
    }
}
