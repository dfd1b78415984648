use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus bound {requested} exceeds the supported maximum {max}")]
    BoundExceeded { requested: u32, max: u32 },

    #[error("genus {genus} is above the exploration bound {bound}")]
    GenusAboveBound { genus: u32, bound: u32 },

    #[error("table sized for genus {table} cannot be explored up to genus {bound}")]
    TableTooShort { table: u32, bound: u32 },

    #[error("semigroup counter overflowed at genus {genus}")]
    CountOverflow { genus: u32 },

    #[error("generators have gcd {gcd}, so their closure has infinite complement")]
    NotNumericalSemigroup { gcd: u32 },

    #[error("bitmap bound {bound} is too small to certify the conductor")]
    OracleBoundTooSmall { bound: usize },

    #[error("parallel counting needs at least one worker")]
    NoWorkers,

    #[error("worker thread failed: {0}")]
    Worker(String),
}
