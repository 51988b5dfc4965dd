//! Built-in Hopf algebras and the coaction of the Laurent polynomials on
//! A(SL_q(2)).

pub mod group;
pub mod presented;

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::coaction::Coaction;
use crate::hopf::{element_of, tensor_of, word, HopfRef, Tensor};
pub use group::{FunctionAlgebra, GroupAlgebra, GroupTable};
pub use presented::{Presented, Strategy};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Group(GroupTable),
    Functions(GroupTable),
    Tensor(usize),
    Laurent,
    Uqsl2,
    Aslq2,
}

#[derive(Clone)]
pub struct Instance {
    pub name: String,
    pub kind: InstanceKind,
    pub hopf: HopfRef,
    /// Set for instances given by a presentation.
    pub presented: Option<Arc<Presented>>,
}

impl Instance {
    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    /// Pairs listed by the instance, for the CLI: label, character, sigma.
    pub fn pairs(&self) -> Vec<(String, String, String)> {
        self.hopf.advertised_pairs()
    }
}

fn group_table(arg: &str) -> Result<GroupTable> {
    match GroupTable::builtin(arg) {
        Some(t) => Ok(t),
        None => GroupTable::load(Path::new(arg)),
    }
}

/// The field an instance is built over when none is requested.
pub fn default_field(name: &str) -> Field {
    match name {
        "uqsl2" | "aslq2" => Field::RatFun,
        _ => Field::Rational,
    }
}

/// Builds an instance by name: `group:<Z1|Z2|Z3|Z4|S3|table file>`,
/// `fungrp:<same>`, `tensor:<dim V>`, `laurent`, `uqsl2`, `aslq2`.
pub fn build_instance(name: &str, field: Option<Field>) -> Result<Instance> {
    let field = field.unwrap_or_else(|| default_field(name));
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let need_arg = || arg.ok_or_else(|| Error::Config(format!("instance '{name}' needs a parameter")));
    let presented = |p: Presented, kind: InstanceKind| {
        let p = Arc::new(p);
        Instance { name: name.to_string(), kind, hopf: p.clone(), presented: Some(p) }
    };
    let inst = match head {
        "group" => {
            let t = group_table(need_arg()?)?;
            Instance {
                name: name.to_string(),
                kind: InstanceKind::Group(t.clone()),
                hopf: Arc::new(GroupAlgebra::new(t, field)),
                presented: None,
            }
        }
        "fungrp" => {
            let t = group_table(need_arg()?)?;
            Instance {
                name: name.to_string(),
                kind: InstanceKind::Functions(t.clone()),
                hopf: Arc::new(FunctionAlgebra::new(t, field)),
                presented: None,
            }
        }
        "tensor" => {
            let d: usize = need_arg()?.parse().map_err(|_| Error::Config(format!("bad dimension in '{name}'")))?;
            presented(presented::tensor_algebra(d, field)?, InstanceKind::Tensor(d))
        }
        "laurent" => presented(presented::laurent(field)?, InstanceKind::Laurent),
        "uqsl2" | "aslq2" => {
            if field != Field::RatFun {
                return Err(Error::Config(format!("{name} is defined over Q(q), not {field}")));
            }
            if head == "uqsl2" {
                presented(presented::uqsl2()?, InstanceKind::Uqsl2)
            } else {
                presented(presented::aslq2()?, InstanceKind::Aslq2)
            }
        }
        _ => return Err(Error::Config(format!("unknown instance '{name}'"))),
    };
    Ok(inst)
}

/// Named built-in coactions. `laurent_on_aslq2` grades A(SL_q(2)) by
/// `x, v -> z` and `u, y -> z^-1`.
pub fn builtin_coaction(name: &str) -> Result<Coaction> {
    match name {
        "laurent_on_aslq2" => {
            let a = Arc::new(presented::aslq2()?);
            let h = Arc::new(presented::laurent(Field::RatFun)?);
            let z = element_of(&*h, &word(&[0]));
            let zi = element_of(&*h, &word(&[1]));
            let grade =
                |l: u16, g: &crate::hopf::Element| -> Tensor { tensor_of(&[element_of(&*a, &word(&[l])), g.clone()]) };
            let values = ["x", "u", "v", "y"]
                .iter()
                .enumerate()
                .map(|(l, n)| grade(l as u16, if *n == "x" || *n == "v" { &z } else { &zi }))
                .collect();
            Ok(Coaction::on_letters(name, a, h, values))
        }
        _ => Err(Error::Config(format!("unknown coaction '{name}'"))),
    }
}
