//! Canonical JSON forms.
//!
//! `Rel`:  `{"src":n,"dst":m,"pairs":[[a,b],…]}`, pairs ascending.
//! `MRel`: `{"src":n,"dst":m,"rows":[[[elems…],…],…]}`, one list of
//! subsets per source element, subsets in numeric mask order and each
//! subset as its ascending element list.
//!
//! Input order is free; output is always canonical, so re-serializing a
//! parsed canonical document reproduces it byte for byte.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::mrel::MRel;
use crate::power::SubsetMask;
use crate::rel::Rel;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelJson {
    src: usize,
    dst: usize,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MRelJson {
    src: usize,
    dst: usize,
    rows: Vec<Vec<Vec<usize>>>,
}

impl Serialize for Rel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelJson { src: self.src(), dst: self.dst(), pairs: self.pairs().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RelJson::deserialize(d)?;
        Rel::from_pairs(j.src, j.dst, j.pairs).map_err(serde::de::Error::custom)
    }
}

impl Serialize for MRel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows = self.rows().iter().map(|row| row.iter().map(|m| m.elems().collect()).collect()).collect();
        MRelJson { src: self.src(), dst: self.dst(), rows }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MRel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = MRelJson::deserialize(d)?;
        let mut rows = Vec::with_capacity(j.rows.len());
        for row in j.rows {
            let mut masks = Vec::with_capacity(row.len());
            for elems in row {
                if let Some(&e) = elems.iter().find(|&&e| e >= j.dst) {
                    return Err(serde::de::Error::custom(Error::Invalid(format!(
                        "element {e} outside a carrier of size {}",
                        j.dst
                    ))));
                }
                masks.push(SubsetMask::from_elems(elems));
            }
            rows.push(masks);
        }
        MRel::new(j.src, j.dst, rows).map_err(serde::de::Error::custom)
    }
}

impl Rel {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("relations always serialize")
    }

    pub fn from_json(text: &str) -> Result<Rel, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl MRel {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multirelations always serialize")
    }

    pub fn from_json(text: &str) -> Result<MRel, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rel_form() {
        let r = Rel::from_pairs(2, 3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(r.to_json(), r#"{"src":2,"dst":3,"pairs":[[0,2],[1,0]]}"#);
        assert_eq!(Rel::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn mrel_form() {
        let m =
            MRel::from_pairs(2, 2, [(0, SubsetMask::new(3)), (0, SubsetMask::EMPTY), (1, SubsetMask::new(2))]).unwrap();
        assert_eq!(m.to_json(), r#"{"src":2,"dst":2,"rows":[[[],[0,1]],[[1]]]}"#);
        assert_eq!(MRel::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn unordered_input_is_canonicalized() {
        let text = r#"{"src":1,"dst":2,"rows":[[[1,0],[0],[0,1]]]}"#;
        assert_eq!(MRel::from_json(text).unwrap().to_json(), r#"{"src":1,"dst":2,"rows":[[[0],[0,1]]]}"#);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Rel::from_json(r#"{"src":1,"dst":1,"pairs":[[0,1]]}"#).is_err());
        assert!(MRel::from_json(r#"{"src":1,"dst":1,"rows":[[[1]]]}"#).is_err());
        assert!(MRel::from_json(r#"{"src":2,"dst":1,"rows":[[]]}"#).is_err());
        assert!(Rel::from_json(r#"{"src":1,"dst":1,"pairs":[],"extra":0}"#).is_err());
    }

    proptest! {
        #[test]
        fn canonical_round_trip(bits in proptest::collection::vec(any::<bool>(), 16)) {
            let pairs = (0..16).filter(|&i| bits[i]).map(|i| (i / 8, SubsetMask::new((i % 8) as u64)));
            let m = MRel::from_pairs(2, 3, pairs).unwrap();
            let text = m.to_json();
            prop_assert_eq!(MRel::from_json(&text).unwrap().to_json(), text);
            let r = m.to_rel().unwrap();
            let rt = r.to_json();
            prop_assert_eq!(Rel::from_json(&rt).unwrap().to_json(), rt);
        }
    }
}
