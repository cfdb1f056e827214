use crate::error::{Error, Result};

/// Environment variable that overrides both vertex caps.
pub const MAX_VERTICES_ENV: &str = "COSPECTRA_MAX_VERTICES";

/// Resource caps for the dense code paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group for which every character is enumerated.
    pub max_vertices: u64,
    /// Largest graph for which a dense adjacency matrix is built.
    pub max_matrix_vertices: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vertices: 1 << 22,
            max_matrix_vertices: 4096,
        }
    }
}

impl Limits {
    /// Defaults, with both caps replaced by `COSPECTRA_MAX_VERTICES` when it
    /// is set to a positive integer.
    pub fn from_env() -> Self {
        match std::env::var(MAX_VERTICES_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            Some(cap) if cap > 0 => Self {
                max_vertices: cap,
                max_matrix_vertices: cap,
            },
            _ => Self::default(),
        }
    }

    pub(crate) fn check_enumeration(&self, vertices: u64) -> Result<()> {
        check(vertices, self.max_vertices)
    }

    pub(crate) fn check_matrix(&self, vertices: u64) -> Result<()> {
        check(vertices, self.max_matrix_vertices)
    }
}

fn check(vertices: u64, cap: u64) -> Result<()> {
    if vertices > cap {
        Err(Error::TooLarge { vertices, cap })
    } else {
        Ok(())
    }
}
