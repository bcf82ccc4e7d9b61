//! Big integers are serialized as decimal strings so JSON consumers never
//! lose precision.

use std::fmt::Display;

use serde::Serializer;

pub(crate) fn one<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn many<T: Display, S: Serializer>(values: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|v| v.to_string()))
}
