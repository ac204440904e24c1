use std::fmt;

use thiserror::Error;

use crate::euler::ModeKind;

/// Where in the discretization an error was detected.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub enum Location {
    #[default]
    Unknown,
    Cell { i: usize, j: usize },
    Center { i: usize, j: usize },
    Vertex { i: usize, j: usize },
    VerticalEdge { i: usize, j: usize },
    HorizontalEdge { i: usize, j: usize },
    Point { x: f64, y: f64 },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Location::Unknown => write!(f, "unknown location"),
            Location::Cell { i, j } => write!(f, "cell ({i}, {j})"),
            Location::Center { i, j } => write!(f, "center node of cell ({i}, {j})"),
            Location::Vertex { i, j } => write!(f, "vertex ({i}, {j})"),
            Location::VerticalEdge { i, j } => write!(f, "vertical edge ({i}, {j})"),
            Location::HorizontalEdge { i, j } => write!(f, "horizontal edge ({i}, {j})"),
            Location::Point { x, y } => write!(f, "point ({x}, {y})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum Error {
    #[error("invalid state at {location}: rho = {rho:e}, p = {p:e}")]
    InvalidState { location: Location, rho: f64, p: f64 },

    #[error("acoustic CFL number {nu} exceeds the limit {limit} at {location}")]
    CflViolation { nu: f64, limit: f64, location: Location },

    #[error("non-finite coordinate ({x}, {y})")]
    NonFiniteCoordinate { x: f64, y: f64 },

    #[error("{0:?} mode requires a nonzero wavevector")]
    ZeroWavevector(ModeKind),

    #[error("conservation residual {residual:e} in component {component} exceeds {limit:e}")]
    Conservation { component: usize, residual: f64, limit: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("step {step} (t = {time}): {source}")]
    Step { step: usize, time: f64, source: Box<Error> },
}

impl Error {
    /// Attaches a location to errors that were raised without one.
    pub fn at(self, location: Location) -> Self {
        match self {
            Error::InvalidState { location: Location::Unknown, rho, p } => {
                Error::InvalidState { location, rho, p }
            }
            Error::CflViolation { nu, limit, location: Location::Unknown } => {
                Error::CflViolation { nu, limit, location }
            }
            other => other,
        }
    }

    pub fn location(&self) -> Option<Location> {
        match self {
            Error::InvalidState { location, .. } | Error::CflViolation { location, .. } => {
                Some(*location)
            }
            Error::Step { source, .. } => source.location(),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
