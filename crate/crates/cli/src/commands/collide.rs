//! `collide`: enumerate the 2-tree isomorphism classes on n vertices, take
//! each one's oracle feature vector, and report groups of non-isomorphic
//! graphs sharing a vector, witnesses that the vector is not a complete
//! invariant.

use crate::args::{CollideArgs, Format};
use crate::output::{degrees, write_json};
use crate::CliError;
use bichroma::graphs::enumerate_two_trees;
use bichroma::oracle::{oracle_spectrum, Constraint};
use bichroma::spectra::FeatureVector;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;

#[derive(Clone, Debug, Serialize)]
pub struct CollisionMember {
    pub degree_sequence: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CollisionGroup {
    pub n: usize,
    pub vector: FeatureVector,
    pub members: Vec<CollisionMember>,
}

/// Groups of size >= 2, ordered by vector; members ordered by descending
/// degree sequence. Also returns the total class count.
pub fn collision_groups(n: usize) -> Result<(usize, Vec<CollisionGroup>), CliError> {
    let reps = enumerate_two_trees(n)?;
    let mut by_vector: BTreeMap<FeatureVector, Vec<usize>> = BTreeMap::new();
    for (i, g) in reps.iter().enumerate() {
        by_vector
            .entry(oracle_spectrum(g, Constraint::Bichromatic)?)
            .or_default()
            .push(i);
    }
    let groups = by_vector
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(vector, members)| {
            let mut members: Vec<CollisionMember> = members
                .into_iter()
                .map(|i| CollisionMember {
                    degree_sequence: reps[i].degree_sequence(),
                    edges: reps[i].edges().iter().copied().collect(),
                })
                .collect();
            members.sort_by(|a, b| {
                b.degree_sequence
                    .cmp(&a.degree_sequence)
                    .then_with(|| a.edges.cmp(&b.edges))
            });
            CollisionGroup { n, vector, members }
        })
        .collect();
    Ok((reps.len(), groups))
}

pub fn run(args: &CollideArgs, w: &mut dyn Write) -> Result<(), CliError> {
    let (classes, groups) = collision_groups(args.n)?;
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: usize,
                classes: usize,
                groups: Vec<CollisionGroup>,
            }
            write_json(
                w,
                &Out {
                    n: args.n,
                    classes,
                    groups,
                },
            )?;
        }
        Format::Csv => {
            writeln!(w, "group,n,degree_sequence,vector")?;
            for (gi, group) in groups.iter().enumerate() {
                let vector: Vec<String> = group
                    .vector
                    .entries()
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                for member in &group.members {
                    let seq: Vec<String> = member
                        .degree_sequence
                        .iter()
                        .map(|d| d.to_string())
                        .collect();
                    writeln!(
                        w,
                        "{},{},{},{}",
                        gi + 1,
                        group.n,
                        seq.join(" "),
                        vector.join(" ")
                    )?;
                }
            }
        }
        Format::Text => {
            let noun = if classes == 1 { "class" } else { "classes" };
            if groups.is_empty() {
                writeln!(
                    w,
                    "two-tree n={}: {} {}, no collisions",
                    args.n, classes, noun
                )?;
            } else {
                writeln!(
                    w,
                    "two-tree n={}: {} {}, {} collision group(s)",
                    args.n,
                    classes,
                    noun,
                    groups.len()
                )?;
                for (gi, group) in groups.iter().enumerate() {
                    writeln!(w, "group {}: vector={}", gi + 1, group.vector)?;
                    for member in &group.members {
                        let edges: Vec<String> = member
                            .edges
                            .iter()
                            .map(|(u, v)| format!("{u}-{v}"))
                            .collect();
                        writeln!(
                            w,
                            "  degrees={} edges={}",
                            degrees(&member.degree_sequence),
                            edges.join(",")
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}
