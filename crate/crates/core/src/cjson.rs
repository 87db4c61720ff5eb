//! `{re, im}` serialization for complex values.

use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::C64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cplx {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for Cplx {
    fn from(z: C64) -> Self {
        Cplx { re: z.re, im: z.im }
    }
}

impl From<Cplx> for C64 {
    fn from(z: Cplx) -> Self {
        C64::new(z.re, z.im)
    }
}

pub fn one<S: Serializer>(z: &C64, s: S) -> Result<S::Ok, S::Error> {
    Cplx::from(*z).serialize(s)
}

pub fn opt<S: Serializer>(z: &Option<C64>, s: S) -> Result<S::Ok, S::Error> {
    z.map(Cplx::from).serialize(s)
}

pub fn many<S: Serializer>(zs: &[C64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(zs.len()))?;
    for z in zs {
        seq.serialize_element(&Cplx::from(*z))?;
    }
    seq.end()
}
