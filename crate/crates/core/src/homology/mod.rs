//! Resolutions, projective dimension, stable and singular Hom, and
//! Hochschild homology.

mod complex;
mod key_iso;
mod pd;
mod resolution;
mod stable;
mod tor;

pub use complex::{
    bar_complex, hochschild_boundary, hochschild_complex, Complex, HomologyBasis, BAR_ENTRY_CAP,
};
pub use key_iso::{key_isomorphism, KeyIsoReport, KeyIsoRow, KEY_ISO_DIM_CAP};
pub use pd::{pd, CycleCertificate, CycleEdge, PdVerdict};
pub use resolution::{minimal_resolution, Resolution};
pub use stable::{
    omega_map, sing_hom, stable_hom, SingHomReport, SingHomVerdict, StableHom, STAGE_HOM_CAP,
};
pub use tor::{envelope_tor_complex, hochschild, tor_envelope, HHMethod, HHTable};

#[cfg(test)]
mod tests;
