//! JSON records for forms and codimension-one instances. Field elements
//! are written as decimal strings (`"a/b"` over Q) so that no value passes
//! through floating point.

use serde::{Deserialize, Serialize};

use crate::decomp::{CodimOneInstance, PowerTerm};
use crate::error::{Error, Result};
use crate::exactalg::{Field, FieldSpec};
use crate::polyring::{Form, LinearForm, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub n: usize,
    pub degree: usize,
    pub ring: Ring,
    pub field: FieldSpec,
    pub coeffs: Vec<String>,
}

fn format_all<F: Field>(field: &F, xs: &[F::Elem]) -> Vec<String> {
    xs.iter().map(|x| field.format(x)).collect()
}

fn parse_all<F: Field>(field: &F, xs: &[String]) -> Result<Vec<F::Elem>> {
    xs.iter().map(|x| field.parse(x)).collect()
}

fn check_field<F: Field>(field: &F, spec: FieldSpec) -> Result<()> {
    if field.spec() != spec {
        return Err(Error::Parse(format!("record is over {spec}, expected {}", field.spec())));
    }
    Ok(())
}

impl FormRecord {
    pub fn from_form<F: Field>(field: &F, f: &Form<F>) -> Self {
        Self {
            n: f.n(),
            degree: f.degree(),
            ring: f.ring(),
            field: field.spec(),
            coeffs: format_all(field, f.coeffs()),
        }
    }

    pub fn to_form<F: Field>(&self, field: &F) -> Result<Form<F>> {
        check_field(field, self.field)?;
        Form::new(self.n, self.degree, self.ring, parse_all(field, &self.coeffs)?)
    }
}

/// A form in S with its hyperplanes, given as coefficient lists of linear
/// forms in T, and optionally summands as coefficient lists in S.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    #[serde(flatten)]
    pub form: FormRecord,
    pub hyperplanes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summands: Option<Vec<Vec<String>>>,
}

impl InstanceRecord {
    pub fn from_instance<F: Field>(field: &F, inst: &CodimOneInstance<F>) -> Self {
        Self {
            form: FormRecord::from_form(field, &inst.f),
            hyperplanes: inst.hyperplanes.iter().map(|l| format_all(field, l.coeffs())).collect(),
            summands: inst
                .summands
                .as_ref()
                .map(|gs| gs.iter().map(|g| format_all(field, g.coeffs())).collect()),
        }
    }

    pub fn to_instance<F: Field>(&self, field: &F) -> Result<CodimOneInstance<F>> {
        let f = self.form.to_form(field)?;
        if f.ring() != Ring::S {
            return Err(Error::RingMismatch("instance form must live in S".into()));
        }
        let hyperplanes = self
            .hyperplanes
            .iter()
            .map(|c| {
                let l = LinearForm::new(field, Ring::T, parse_all(field, c)?)?;
                if l.n() != f.n() {
                    return Err(Error::VariableMismatch {
                        expected: f.n(),
                        found: l.n(),
                    });
                }
                Ok(l)
            })
            .collect::<Result<Vec<_>>>()?;
        let summands = self
            .summands
            .as_ref()
            .map(|gs| {
                gs.iter()
                    .map(|c| Form::new(f.n(), f.degree(), Ring::S, parse_all(field, c)?))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(CodimOneInstance {
            n: f.n(),
            d: f.degree(),
            s: hyperplanes.len(),
            f,
            hyperplanes,
            summands,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerTermRecord {
    pub coefficient: String,
    pub point: Vec<String>,
}

impl PowerTermRecord {
    pub fn from_term<F: Field>(field: &F, t: &PowerTerm<F>) -> Self {
        Self {
            coefficient: field.format(&t.coefficient),
            point: format_all(field, t.point.coeffs()),
        }
    }
}
