use thiserror::Error;

use crate::ehrhart::EhrhartError;
use crate::geometry::GeometryError;
use crate::perm::PermError;
use crate::poset::PosetError;
use crate::triangulation::TriangulationError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Ehrhart(#[from] EhrhartError),
}
