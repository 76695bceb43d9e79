use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::builtin;
use crate::algebra::{complete_to_basis, Algebra, Presentation};
use crate::error::{Error, Result};
use crate::homology::CappedNat;
use crate::modrep::{read_module, ModuleRep};

/// Invariants recorded in the manifest, computed by hand for each entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub domdim: Option<CappedNat>,
    pub gldim: Option<CappedNat>,
}

/// An indecomposable module shipped with an entry.
#[derive(Clone, Debug)]
pub struct KnownModule {
    pub name: String,
    pub module: ModuleRep,
    pub projective: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub file: String,
    pub algebra: Algebra,
    /// Tagged in the manifest as a Nakayama algebra.
    pub nakayama: bool,
    pub expected: Expected,
    pub indecomposables: Vec<KnownModule>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    #[serde(default)]
    entry: Vec<ManifestEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestEntry {
    id: String,
    file: String,
    #[serde(default)]
    nakayama: bool,
    domdim: Option<String>,
    gldim: Option<String>,
    modules: Option<String>,
    #[serde(default)]
    projective: Vec<String>,
}

enum Source<'a> {
    Dir(&'a Path),
    Builtin,
}

impl Source<'_> {
    fn read(&self, rel: &str) -> Result<String> {
        match self {
            Source::Dir(d) => {
                let p = d.join(rel);
                fs::read_to_string(&p).map_err(|e| Error::Corpus(format!("{}: {e}", p.display())))
            }
            Source::Builtin => builtin::FILES
                .iter()
                .find(|(name, _)| *name == rel)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| Error::Corpus(format!("builtin corpus has no file {rel}"))),
        }
    }

    fn exists(&self, rel: &str) -> bool {
        match self {
            Source::Dir(d) => d.join(rel).is_file(),
            Source::Builtin => builtin::FILES.iter().any(|(name, _)| *name == rel),
        }
    }

    /// Sorted file names with the given extension directly inside `rel`.
    fn list(&self, rel: &str, ext: &str) -> Result<Vec<String>> {
        let mut out: Vec<String> = match self {
            Source::Dir(d) => {
                let dir: PathBuf = if rel.is_empty() { d.to_path_buf() } else { d.join(rel) };
                let rd = fs::read_dir(&dir).map_err(|e| Error::Corpus(format!("{}: {e}", dir.display())))?;
                let mut names = Vec::new();
                for e in rd {
                    let p = e?.path();
                    if p.is_file() && p.extension().is_some_and(|x| x == ext) {
                        names.push(p.file_name().unwrap().to_string_lossy().into_owned());
                    }
                }
                names
            }
            Source::Builtin => {
                let prefix = if rel.is_empty() { String::new() } else { format!("{}/", rel.trim_end_matches('/')) };
                builtin::FILES
                    .iter()
                    .filter_map(|(name, _)| name.strip_prefix(prefix.as_str()))
                    .filter(|n| !n.contains('/') && n.ends_with(&format!(".{ext}")))
                    .map(str::to_string)
                    .collect()
            }
        };
        out.sort();
        Ok(out)
    }
}

fn join(dir: &str, name: &str) -> String {
    if dir.is_empty() {
        name.to_string()
    } else {
        format!("{}/{name}", dir.trim_end_matches('/'))
    }
}

fn parse_dim(id: &str, what: &str, s: Option<String>) -> Result<Option<CappedNat>> {
    s.map(|s| s.parse().map_err(|e| Error::Corpus(format!("entry {id}: {what}: {e}")))).transpose()
}

/// Parses a presentation and completes it, prefixing errors with the file name.
pub(crate) fn load_algebra(name: &str, text: &str, max_path_length: usize) -> Result<Algebra> {
    let pres = Presentation::parse(text).map_err(|e| Error::Corpus(format!("{name}: {e}")))?;
    complete_to_basis(&pres, max_path_length).map_err(|e| Error::Corpus(format!("{name}: {e}")))
}

impl Corpus {
    /// Loads `dir/manifest.toml`, or every `*.alg` file in `dir` when there is no manifest.
    pub fn load(dir: &Path, max_path_length: usize) -> Result<Corpus> {
        if !dir.is_dir() {
            return Err(Error::Corpus(format!("{} is not a directory", dir.display())));
        }
        Self::from_source(&Source::Dir(dir), max_path_length)
    }

    /// The corpus compiled into the library.
    pub fn builtin() -> Corpus {
        Self::from_source(&Source::Builtin, crate::algebra::DEFAULT_MAX_PATH_LENGTH).expect("builtin corpus loads")
    }

    fn from_source(src: &Source<'_>, max_path_length: usize) -> Result<Corpus> {
        let entries = if src.exists("manifest.toml") {
            let text = src.read("manifest.toml")?;
            let manifest: Manifest =
                toml::from_str(&text).map_err(|e| Error::Corpus(format!("manifest.toml: {e}")))?;
            manifest.entry.into_iter().map(|e| Self::entry(src, e, max_path_length)).collect::<Result<Vec<_>>>()?
        } else {
            src.list("", "alg")?
                .into_iter()
                .map(|file| {
                    let id = file.trim_end_matches(".alg").to_string();
                    let algebra = load_algebra(&file, &src.read(&file)?, max_path_length)?;
                    Ok(CorpusEntry { id, file, algebra, nakayama: false, expected: Expected::default(), indecomposables: vec![] })
                })
                .collect::<Result<Vec<_>>>()?
        };
        if entries.is_empty() {
            return Err(Error::Corpus("corpus has no entries".into()));
        }
        for (i, e) in entries.iter().enumerate() {
            if entries[..i].iter().any(|f| f.id == e.id) {
                return Err(Error::Corpus(format!("duplicate entry id {}", e.id)));
            }
        }
        Ok(Corpus { entries })
    }

    fn entry(src: &Source<'_>, e: ManifestEntry, max_path_length: usize) -> Result<CorpusEntry> {
        let algebra = load_algebra(&e.file, &src.read(&e.file)?, max_path_length)?;
        let expected = Expected {
            domdim: parse_dim(&e.id, "domdim", e.domdim)?,
            gldim: parse_dim(&e.id, "gldim", e.gldim)?,
        };
        let mut indecomposables = Vec::new();
        if let Some(dir) = &e.modules {
            for file in src.list(dir, "mod")? {
                let name = file.trim_end_matches(".mod").to_string();
                let path = join(dir, &file);
                let module = read_module(&algebra, &src.read(&path)?)
                    .map_err(|err| Error::Corpus(format!("{path}: {err}")))?;
                let projective = e.projective.contains(&name);
                indecomposables.push(KnownModule { name, module, projective });
            }
            for p in &e.projective {
                if !indecomposables.iter().any(|m| &m.name == p) {
                    return Err(Error::Corpus(format!("entry {}: projective module {p} not found", e.id)));
                }
            }
        }
        Ok(CorpusEntry { id: e.id, file: e.file, algebra, nakayama: e.nakayama, expected, indecomposables })
    }

    pub fn get(&self, id: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The text of a file from the builtin corpus, e.g. `"kA2.alg"`.
pub fn builtin_file(name: &str) -> Option<&'static str> {
    builtin::FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
