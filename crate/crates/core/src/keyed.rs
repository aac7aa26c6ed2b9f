//! Fixed-size containers indexed by coefficient key or wedge type.

use std::ops::{Index, IndexMut};

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::direction::{CoefficientKey, WedgeType};

/// One value per [`CoefficientKey`], in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ByKey<T>(pub [T; 8]);

impl<T> ByKey<T> {
    pub fn from_fn(mut f: impl FnMut(CoefficientKey) -> T) -> Self {
        ByKey(CoefficientKey::ALL.map(&mut f))
    }

    pub fn iter(&self) -> impl Iterator<Item = (CoefficientKey, &T)> {
        CoefficientKey::ALL.into_iter().zip(self.0.iter())
    }

    pub fn map<U>(&self, mut f: impl FnMut(CoefficientKey, &T) -> U) -> ByKey<U> {
        ByKey::from_fn(|k| f(k, &self[k]))
    }
}

impl<T> Index<CoefficientKey> for ByKey<T> {
    type Output = T;
    fn index(&self, k: CoefficientKey) -> &T {
        &self.0[k.index()]
    }
}

impl<T> IndexMut<CoefficientKey> for ByKey<T> {
    fn index_mut(&mut self, k: CoefficientKey) -> &mut T {
        &mut self.0[k.index()]
    }
}

impl<T: Serialize> Serialize for ByKey<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(8))?;
        for (k, v) in self.iter() {
            map.serialize_entry(&k.short_name(), v)?;
        }
        map.end()
    }
}

/// One value per [`WedgeType`], in `ii, io, oi, oo` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ByType<T>(pub [T; 4]);

impl<T> ByType<T> {
    pub fn from_fn(mut f: impl FnMut(WedgeType) -> T) -> Self {
        ByType(WedgeType::ALL.map(&mut f))
    }

    pub fn iter(&self) -> impl Iterator<Item = (WedgeType, &T)> {
        WedgeType::ALL.into_iter().zip(self.0.iter())
    }
}

impl<T> Index<WedgeType> for ByType<T> {
    type Output = T;
    fn index(&self, t: WedgeType) -> &T {
        &self.0[t.index()]
    }
}

impl<T> IndexMut<WedgeType> for ByType<T> {
    fn index_mut(&mut self, t: WedgeType) -> &mut T {
        &mut self.0[t.index()]
    }
}

impl<T: Serialize> Serialize for ByType<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        for (t, v) in self.iter() {
            map.serialize_entry(&t.name(), v)?;
        }
        map.end()
    }
}
