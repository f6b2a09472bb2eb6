//! Topological types of closed 2-orbifolds.

use serde::{Deserialize, Serialize};

use crate::{Error, Rational, Result};

/// Topological type of a closed 2-orbifold: the underlying surface
/// (handles or crosscaps), cone points, and mirror boundaries carrying
/// corner reflectors.
///
/// Always held in canonical form: cone orders sorted ascending, corner
/// lists sorted ascending, boundaries sorted lexicographically, and never
/// both handles and crosscaps (one handle plus one crosscap is rewritten as
/// three crosscaps).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SignatureRepr", into = "SignatureRepr")]
pub struct OrbifoldSignature {
    handles: u32,
    crosscaps: u32,
    cone_points: Vec<u32>,
    mirror_boundaries: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct SignatureRepr {
    handles: u32,
    crosscaps: u32,
    cone_points: Vec<u32>,
    mirror_boundaries: Vec<Vec<u32>>,
}

impl TryFrom<SignatureRepr> for OrbifoldSignature {
    type Error = Error;

    fn try_from(r: SignatureRepr) -> Result<Self> {
        OrbifoldSignature::new(r.handles, r.crosscaps, r.cone_points, r.mirror_boundaries)
    }
}

impl From<OrbifoldSignature> for SignatureRepr {
    fn from(s: OrbifoldSignature) -> Self {
        SignatureRepr {
            handles: s.handles,
            crosscaps: s.crosscaps,
            cone_points: s.cone_points,
            mirror_boundaries: s.mirror_boundaries,
        }
    }
}

/// Geometric structure carried by the orbifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeometryType {
    Spherical,
    Euclidean,
    Hyperbolic,
    /// Bad orbifold; these all have positive Euler characteristic.
    BadPositive,
}

impl OrbifoldSignature {
    pub fn new(
        handles: u32,
        crosscaps: u32,
        mut cone_points: Vec<u32>,
        mut mirror_boundaries: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if let Some(m) = cone_points.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidSignature(format!("cone order {m} < 2")));
        }
        if let Some(n) = mirror_boundaries.iter().flatten().find(|&&n| n < 2) {
            return Err(Error::InvalidSignature(format!("corner order {n} < 2")));
        }
        let (handles, crosscaps) = if handles > 0 && crosscaps > 0 {
            (0, crosscaps + 2 * handles)
        } else {
            (handles, crosscaps)
        };
        cone_points.sort_unstable();
        for b in &mut mirror_boundaries {
            b.sort_unstable();
        }
        mirror_boundaries.sort();
        Ok(OrbifoldSignature {
            handles,
            crosscaps,
            cone_points,
            mirror_boundaries,
        })
    }

    /// The smooth 2-sphere.
    pub fn sphere() -> Self {
        OrbifoldSignature::default()
    }

    /// Sphere with the given cone points.
    pub fn with_cones(orders: &[u32]) -> Result<Self> {
        Self::new(0, 0, orders.to_vec(), Vec::new())
    }

    /// Closed orientable surface of genus `g`.
    pub fn surface(genus: u32) -> Self {
        Self {
            handles: genus,
            ..Self::default()
        }
    }

    pub fn handles(&self) -> u32 {
        self.handles
    }

    pub fn crosscaps(&self) -> u32 {
        self.crosscaps
    }

    pub fn cone_points(&self) -> &[u32] {
        &self.cone_points
    }

    pub fn mirror_boundaries(&self) -> &[Vec<u32>] {
        &self.mirror_boundaries
    }

    pub fn corner_orders(&self) -> impl Iterator<Item = u32> + '_ {
        self.mirror_boundaries.iter().flatten().copied()
    }

    pub fn has_mirrors(&self) -> bool {
        !self.mirror_boundaries.is_empty()
    }

    /// True when there are no zero-dimensional singular points.
    pub fn has_no_singular_points(&self) -> bool {
        self.cone_points.is_empty() && self.corner_orders().next().is_none()
    }

    /// Total number of cone points, corners, boundaries, handles and crosscaps.
    pub fn feature_count(&self) -> usize {
        self.handles as usize
            + self.crosscaps as usize
            + self.cone_points.len()
            + self.mirror_boundaries.len()
            + self.corner_orders().count()
    }

    /// Orbifold Euler characteristic, exact.
    pub fn euler_characteristic(&self) -> Rational {
        let base = 2 - 2 * i64::from(self.handles)
            - i64::from(self.crosscaps)
            - self.mirror_boundaries.len() as i64;
        let cones: Rational = self
            .cone_points
            .iter()
            .map(|&m| Rational::new(i64::from(m) - 1, i64::from(m)))
            .sum();
        let corners: Rational = self
            .corner_orders()
            .map(|n| Rational::new(i64::from(n) - 1, 2 * i64::from(n)))
            .sum();
        Rational::from(base) - cones - corners
    }

    /// An orientable 2-orbifold has only isolated singularities and an
    /// orientable underlying surface.
    pub fn is_orientable(&self) -> bool {
        self.crosscaps == 0 && self.mirror_boundaries.is_empty()
    }

    /// Teardrops, unequal footballs, and their mirrored halves.
    pub fn is_bad(&self) -> bool {
        if self.handles != 0 || self.crosscaps != 0 {
            return false;
        }
        let lonely_or_unequal = |orders: &[u32]| match orders {
            [_] => true,
            [a, b] => a != b,
            _ => false,
        };
        match self.mirror_boundaries.as_slice() {
            [] => lonely_or_unequal(&self.cone_points),
            [corners] if self.cone_points.is_empty() => lonely_or_unequal(corners),
            _ => false,
        }
    }

    pub fn geometry_type(&self) -> GeometryType {
        if self.is_bad() {
            return GeometryType::BadPositive;
        }
        let chi = self.euler_characteristic();
        if chi.is_positive() {
            GeometryType::Spherical
        } else if chi.is_zero() {
            GeometryType::Euclidean
        } else {
            GeometryType::Hyperbolic
        }
    }
}

/// Builder-style helpers used by rosters and tests.
impl OrbifoldSignature {
    pub(crate) fn raw(
        handles: u32,
        crosscaps: u32,
        cone_points: Vec<u32>,
        mirror_boundaries: Vec<Vec<u32>>,
    ) -> Self {
        Self::new(handles, crosscaps, cone_points, mirror_boundaries)
            .expect("orders are at least 2")
    }
}
