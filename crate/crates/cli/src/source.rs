//! Turning command-line arguments into a structure map.

use anyhow::{bail, Context};
use hopf_partial::actions::{ActionMap, PartialGroupAction};
use hopf_partial::coactions::CoactionMap;
use hopf_partial::exactlin::Field;
use hopf_partial::examples::{
    action_example, coaction_example, ExampleParams, ACTION_EXAMPLES, COACTION_EXAMPLES,
};
use hopf_partial::mapfile::MapFile;

use crate::SourceArgs;

pub enum Loaded {
    Coaction(CoactionMap),
    Action(ActionMap),
    Group(PartialGroupAction),
}

pub fn parse_field(s: Option<&str>) -> anyhow::Result<Option<Field>> {
    Ok(match s {
        Some(s) => Some(Field::parse(s)?),
        None => None,
    })
}

pub fn load(args: &SourceArgs) -> anyhow::Result<Loaded> {
    let field = parse_field(args.field.as_deref())?;
    if let Some(path) = &args.file {
        if args.alpha.is_some() || args.dim.is_some() {
            bail!(hopf_partial::Error::Invalid(
                "--alpha and --dim only apply to --example".into()
            ));
        }
        let m = MapFile::load(path).with_context(|| format!("reading {}", path.display()))?;
        if let Some(f) = field {
            if f != m.field() {
                return Err(hopf_partial::Error::FieldMismatch(f, m.field()).into());
            }
        }
        return Ok(match m {
            MapFile::Coaction(c) => Loaded::Coaction(c),
            MapFile::Action(a) => Loaded::Action(a),
            MapFile::PartialGroupAction(p) => Loaded::Group(p),
        });
    }
    let Some(name) = &args.example else {
        bail!(hopf_partial::Error::Invalid(
            "give a map file or --example <name>".into()
        ));
    };
    let field = field.unwrap_or(Field::Rational);
    let mut p = ExampleParams::new(field);
    if let Some(a) = &args.alpha {
        p.alpha = field.parse_scalar(a)?;
    }
    if let Some(d) = args.dim {
        p.dim = d;
    }
    if COACTION_EXAMPLES.contains(&name.as_str()) {
        Ok(Loaded::Coaction(coaction_example(name, field, &p)?))
    } else if ACTION_EXAMPLES.contains(&name.as_str()) {
        Ok(Loaded::Action(action_example(name, field, &p)?))
    } else {
        Err(hopf_partial::Error::Invalid(format!(
            "unknown example {name:?}; see `hpa examples list`"
        ))
        .into())
    }
}
