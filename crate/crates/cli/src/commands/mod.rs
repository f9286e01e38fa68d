mod boundaries;
mod query;
mod sweep;
mod verify;

pub use boundaries::boundaries;
pub use query::{classify, compare, constant};
pub use sweep::sweep;
pub use verify::verify;

use hardy_rellich::spectral::GridSpec;

use crate::args::GridArgs;
use crate::error::CliResult;

/// Grid points per unit of window half-width when only `--grid-T` is given.
const POINTS_PER_UNIT_T: f64 = 200.0;

pub fn grid_from(args: &GridArgs) -> CliResult<GridSpec> {
    let default = GridSpec::verification();
    Ok(match (args.grid_t, args.grid_points) {
        (None, None) => default,
        (Some(t), points) => GridSpec::symmetric(
            t,
            points.unwrap_or_else(|| (POINTS_PER_UNIT_T * t).round().max(0.0) as usize),
        )?,
        (None, Some(points)) => GridSpec::new(default.t_min, default.t_max, points)?,
    })
}
