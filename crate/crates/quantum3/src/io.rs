//! JSON file formats for category data, triangulations, diagrams, and
//! surgery presentations. Unknown fields are rejected everywhere.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::{CategoryError, FusionRing, ModularData, SphericalData};
use crate::diagram::{Component, ComponentId, Dir, Event, MorseDiagram};
use crate::scalar::Scalar;
use crate::surgery::{SurgeryError, SurgeryPresentation};
use crate::triangulation::{BuildError, FaceSlot, Triangulation};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: invalid JSON: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: {source}")]
    Category { path: String, source: CategoryError },
    #[error("{path}: {source}")]
    Triangulation { path: String, source: BuildError },
    #[error("{path}: {source}")]
    Presentation { path: String, source: SurgeryError },
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
}

// ---------------------------------------------------------------------------
// category files
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub rank: usize,
    pub dual: Vec<usize>,
    pub fusion: Vec<(usize, usize, usize)>,
    pub qdim: Vec<(f64, f64)>,
    pub sixj: Vec<(usize, usize, usize, usize, usize, usize, f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rsym: Option<Vec<(usize, usize, usize, f64, f64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<(f64, f64)>>,
}

/// Category data loaded from a file: always spherical, modular when the
/// braiding fields are present.
pub enum LoadedCategory {
    Spherical(SphericalData),
    Modular(ModularData),
}

impl LoadedCategory {
    pub fn spherical(&self) -> &SphericalData {
        match self {
            LoadedCategory::Spherical(s) => s,
            LoadedCategory::Modular(m) => &m.base,
        }
    }

    pub fn modular(&self) -> Option<&ModularData> {
        match self {
            LoadedCategory::Spherical(_) => None,
            LoadedCategory::Modular(m) => Some(m),
        }
    }
}

impl CategoryFile {
    pub fn from_spherical(data: &SphericalData) -> Self {
        let mut sixj: Vec<_> = data
            .sixj_table()
            .iter()
            .map(|(k, v)| (k[0], k[1], k[2], k[3], k[4], k[5], v.re, v.im))
            .collect();
        sixj.sort_by_key(|e| (e.0, e.1, e.2, e.3, e.4, e.5));
        let mut fusion = data.ring.admissible_triples();
        fusion.sort_unstable();
        CategoryFile {
            rank: data.rank(),
            dual: (0..data.rank()).map(|i| data.ring.dual(i)).collect(),
            fusion,
            qdim: data.qdims().iter().map(|d| (d.re, d.im)).collect(),
            sixj,
            rsym: None,
            twist: None,
        }
    }

    pub fn from_modular(data: &ModularData) -> Self {
        let mut out = Self::from_spherical(&data.base);
        let mut rsym: Vec<_> = data
            .rsym_table()
            .iter()
            .map(|(k, v)| (k[0], k[1], k[2], v.re, v.im))
            .collect();
        rsym.sort_by_key(|e| (e.0, e.1, e.2));
        out.rsym = Some(rsym);
        out.twist = Some(data.twists().iter().map(|t| (t.re, t.im)).collect());
        out
    }

    pub fn into_data(self, path: &str) -> Result<LoadedCategory, FileError> {
        let ring = FusionRing::new(self.rank, &self.fusion, self.dual)
            .map_err(|source| FileError::Category { path: path.to_string(), source })?;
        let qdim: Vec<Scalar> = self.qdim.iter().map(|&(re, im)| Scalar::new(re, im)).collect();
        let mut sixj = HashMap::new();
        for &(i, j, k, l, m, n, re, im) in &self.sixj {
            sixj.insert([i, j, k, l, m, n], Scalar::new(re, im));
        }
        let base = SphericalData::new(ring, qdim, sixj)
            .map_err(|source| FileError::Category { path: path.to_string(), source })?;
        match (self.rsym, self.twist) {
            (None, None) => Ok(LoadedCategory::Spherical(base)),
            (Some(rs), Some(tw)) => {
                let mut rsym = HashMap::new();
                for &(a, b, c, re, im) in &rs {
                    rsym.insert([a, b, c], Scalar::new(re, im));
                }
                let twist: Vec<Scalar> = tw.iter().map(|&(re, im)| Scalar::new(re, im)).collect();
                let m = ModularData::new(base, rsym, twist)
                    .map_err(|source| FileError::Category { path: path.to_string(), source })?;
                Ok(LoadedCategory::Modular(m))
            }
            _ => Err(FileError::Schema {
                path: path.to_string(),
                message: "rsym and twist must be supplied together".to_string(),
            }),
        }
    }
}

pub fn load_category(path: &Path) -> Result<LoadedCategory, FileError> {
    let ps = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|source| FileError::Read { path: ps.clone(), source })?;
    let file: CategoryFile = serde_json::from_str(&text)
        .map_err(|source| FileError::Parse { path: ps.clone(), source })?;
    file.into_data(&ps)
}

pub fn save_category(path: &Path, file: &CategoryFile) -> Result<(), FileError> {
    let ps = path.display().to_string();
    let text = serde_json::to_string_pretty(file).expect("serializable");
    std::fs::write(path, text).map_err(|source| FileError::Write { path: ps, source })
}

// ---------------------------------------------------------------------------
// triangulation files
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationFile {
    /// vertex names in the global vertex order
    pub vertices: Vec<String>,
    pub tetrahedra: Vec<[String; 4]>,
    /// `[tet, face, tet, face]` identifications, one per triangle class
    pub gluings: Vec<(usize, u8, usize, u8)>,
    /// per-tetrahedron orientation signs (+1 or -1)
    pub orientation: Vec<i8>,
}

impl TriangulationFile {
    pub fn from_triangulation(tri: &Triangulation) -> Self {
        let vertices: Vec<String> = (0..tri.n_vertices()).map(|v| format!("v{v}")).collect();
        let tetrahedra = tri
            .tets()
            .iter()
            .map(|t| {
                [
                    vertices[t[0]].clone(),
                    vertices[t[1]].clone(),
                    vertices[t[2]].clone(),
                    vertices[t[3]].clone(),
                ]
            })
            .collect();
        let gluings = tri
            .gluing_pairs()
            .iter()
            .map(|&((t, f), (t2, f2))| (t, f, t2, f2))
            .collect();
        TriangulationFile {
            vertices,
            tetrahedra,
            gluings,
            orientation: tri.signs().to_vec(),
        }
    }

    pub fn into_triangulation(self, path: &str) -> Result<Triangulation, FileError> {
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(FileError::Schema {
                    path: path.to_string(),
                    message: format!("duplicate vertex name {name:?}"),
                });
            }
        }
        let mut tets = Vec::with_capacity(self.tetrahedra.len());
        for (ti, names) in self.tetrahedra.iter().enumerate() {
            let mut tet = [0usize; 4];
            for (q, name) in names.iter().enumerate() {
                tet[q] = *index.get(name.as_str()).ok_or_else(|| FileError::Schema {
                    path: path.to_string(),
                    message: format!("tetrahedron {ti}: unknown vertex {name:?}"),
                })?;
            }
            tets.push(tet);
        }
        let pairs: Vec<(FaceSlot, FaceSlot)> = self
            .gluings
            .iter()
            .map(|&(t, f, t2, f2)| ((t, f), (t2, f2)))
            .collect();
        Triangulation::build(self.vertices.len(), tets, &pairs, self.orientation)
            .map_err(|source| FileError::Triangulation { path: path.to_string(), source })
    }
}

pub fn load_triangulation(path: &Path) -> Result<Triangulation, FileError> {
    let ps = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|source| FileError::Read { path: ps.clone(), source })?;
    let file: TriangulationFile = serde_json::from_str(&text)
        .map_err(|source| FileError::Parse { path: ps.clone(), source })?;
    file.into_triangulation(&ps)
}

pub fn save_triangulation(path: &Path, tri: &Triangulation) -> Result<(), FileError> {
    let ps = path.display().to_string();
    let file = TriangulationFile::from_triangulation(tri);
    let text = serde_json::to_string_pretty(&file).expect("serializable");
    std::fs::write(path, text).map_err(|source| FileError::Write { path: ps, source })
}

// ---------------------------------------------------------------------------
// diagram and presentation files
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    pub id: ComponentId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color: Option<usize>,
    pub framing: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventRecord {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(rename = "position", alias = "pos")]
    pub pos: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component: Option<ComponentId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_dir: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub components: Vec<ComponentRecord>,
    pub slices: Vec<Vec<EventRecord>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub components: Vec<ComponentRecord>,
    pub slices: Vec<Vec<EventRecord>>,
    pub surgery_components: Vec<ComponentId>,
}

fn parse_events(slices: &[Vec<EventRecord>], path: &str) -> Result<Vec<Vec<Event>>, FileError> {
    let mut out = Vec::with_capacity(slices.len());
    for (si, slice) in slices.iter().enumerate() {
        let mut evs = Vec::with_capacity(slice.len());
        for rec in slice {
            let ev = match rec.kind.as_str() {
                "id" => continue,
                "cup" => {
                    let component = rec.component.ok_or_else(|| FileError::Schema {
                        path: path.to_string(),
                        message: format!("slice {si}: cup event needs a component"),
                    })?;
                    let left_dir = match rec.left_dir.as_deref() {
                        Some("up") | None => Dir::Up,
                        Some("down") => Dir::Down,
                        Some(other) => {
                            return Err(FileError::Schema {
                                path: path.to_string(),
                                message: format!("slice {si}: bad left_dir {other:?}"),
                            })
                        }
                    };
                    Event::Cup { pos: rec.pos, component, left_dir }
                }
                "cap" => Event::Cap { pos: rec.pos },
                "pos" => Event::Cross { pos: rec.pos, positive: true },
                "neg" => Event::Cross { pos: rec.pos, positive: false },
                other => {
                    return Err(FileError::Schema {
                        path: path.to_string(),
                        message: format!("slice {si}: unknown event type {other:?}"),
                    })
                }
            };
            evs.push(ev);
        }
        out.push(evs);
    }
    Ok(out)
}

fn parse_components(
    recs: &[ComponentRecord],
    path: &str,
) -> Result<BTreeMap<ComponentId, Component>, FileError> {
    let mut components = BTreeMap::new();
    for rec in recs {
        if components
            .insert(rec.id, Component { color: rec.color, framing: rec.framing })
            .is_some()
        {
            return Err(FileError::Schema {
                path: path.to_string(),
                message: format!("duplicate component id {}", rec.id),
            });
        }
    }
    Ok(components)
}

impl DiagramFile {
    pub fn into_diagram(self, path: &str) -> Result<MorseDiagram, FileError> {
        Ok(MorseDiagram {
            components: parse_components(&self.components, path)?,
            slices: parse_events(&self.slices, path)?,
        })
    }

    pub fn from_diagram(d: &MorseDiagram) -> Self {
        DiagramFile {
            components: components_to_records(&d.components),
            slices: slices_to_records(&d.slices),
        }
    }
}

fn components_to_records(components: &BTreeMap<ComponentId, Component>) -> Vec<ComponentRecord> {
    components
        .iter()
        .map(|(&id, c)| ComponentRecord { id, color: c.color, framing: c.framing })
        .collect()
}

fn slices_to_records(slices: &[Vec<Event>]) -> Vec<Vec<EventRecord>> {
    slices
        .iter()
        .map(|slice| {
            slice
                .iter()
                .map(|ev| match *ev {
                    Event::Cup { pos, component, left_dir } => EventRecord {
                        kind: "cup".to_string(),
                        pos,
                        component: Some(component),
                        left_dir: Some(match left_dir {
                            Dir::Up => "up".to_string(),
                            Dir::Down => "down".to_string(),
                        }),
                    },
                    Event::Cap { pos } => EventRecord {
                        kind: "cap".to_string(),
                        pos,
                        component: None,
                        left_dir: None,
                    },
                    Event::Cross { pos, positive } => EventRecord {
                        kind: if positive { "pos" } else { "neg" }.to_string(),
                        pos,
                        component: None,
                        left_dir: None,
                    },
                })
                .collect()
        })
        .collect()
}

impl PresentationFile {
    pub fn into_presentation(self, path: &str) -> Result<SurgeryPresentation, FileError> {
        let diagram = MorseDiagram {
            components: parse_components(&self.components, path)?,
            slices: parse_events(&self.slices, path)?,
        };
        let surgery: BTreeSet<ComponentId> = self.surgery_components.iter().copied().collect();
        SurgeryPresentation::new(diagram, surgery)
            .map_err(|source| FileError::Presentation { path: path.to_string(), source })
    }

    pub fn from_presentation(p: &SurgeryPresentation) -> Self {
        PresentationFile {
            components: components_to_records(&p.diagram.components),
            slices: slices_to_records(&p.diagram.slices),
            surgery_components: p.surgery.iter().copied().collect(),
        }
    }
}

pub fn load_diagram(path: &Path) -> Result<MorseDiagram, FileError> {
    let ps = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|source| FileError::Read { path: ps.clone(), source })?;
    let file: DiagramFile = serde_json::from_str(&text)
        .map_err(|source| FileError::Parse { path: ps.clone(), source })?;
    file.into_diagram(&ps)
}

pub fn load_presentation(path: &Path) -> Result<SurgeryPresentation, FileError> {
    let ps = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|source| FileError::Read { path: ps.clone(), source })?;
    let file: PresentationFile = serde_json::from_str(&text)
        .map_err(|source| FileError::Parse { path: ps.clone(), source })?;
    file.into_presentation(&ps)
}
