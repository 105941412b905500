//! Library backing the `snwitness` command line tool: file formats, the
//! certification pipeline, and the parameter-sweep engine.

pub mod formats;
pub mod genspec;
pub mod pipeline;
pub mod report;
pub mod sweep;

/// Exit codes of the command line tool.
///
/// `0`: certification succeeded with a Schmidt number of at least 2.
/// `1`: invalid input (file, format, or sweep specification).
/// `2`: the covariance matrix is not bona fide.
/// `3`: the run succeeded but nothing beyond separability was certified.
/// `4`: the coupling block vanishes; the method does not apply.
pub mod exit_codes {
    pub const CERTIFIED: i32 = 0;
    pub const INVALID_INPUT: i32 = 1;
    pub const NOT_BONA_FIDE: i32 = 2;
    pub const NOT_CERTIFIED: i32 = 3;
    pub const NO_COUPLING: i32 = 4;
}
