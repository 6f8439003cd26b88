#![allow(dead_code)]

use std::path::{Path, PathBuf};

use kbgb_cli::{parse_presentation, Presentation, PresentationMode, Relations};
use kbgb_core::{basis_to_rules, Alphabet, CompletionLimits, Field, Mode, MonomialOrder, RewriteSystem, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A binomial presentation together with its rewrite system.
pub struct Instance {
    pub name: String,
    /// Word form of the presentation (`sgp` or `mon`).
    pub presentation: Presentation,
    pub system: RewriteSystem,
}

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

pub fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.expect("corpus entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "kb"))
        .collect();
    files.sort();
    files
}

/// Limits small enough that diverging inputs stop quickly.
pub fn tight_limits() -> CompletionLimits {
    CompletionLimits::new(8, 64, 16)
}

fn instance(name: String, p: Presentation) -> Instance {
    let system = match p.mode {
        PresentationMode::Alg => basis_to_rules(&p.basis(p.field).expect("basis")).expect("binomial basis"),
        _ => p.rewrite_system().expect("rewrite system"),
    };
    let presentation = Presentation {
        mode: if system.mode() == Mode::Monoid { PresentationMode::Mon } else { PresentationMode::Sgp },
        field: Field::Rational,
        ..p.with_system(&system)
    };
    Instance { name, presentation, system }
}

pub fn static_corpus() -> Vec<Instance> {
    corpus_files()
        .into_iter()
        .map(|path| {
            let text = std::fs::read_to_string(&path).expect("readable corpus file");
            let p = parse_presentation(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            instance(name, p)
        })
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng, letters: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(0..letters as u32)).collect()
}

/// Seeded semigroup presentations over two or three generators with at
/// most four rules, each side of length at most four.
pub fn random_corpus(count: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let letters = rng.gen_range(2..=3);
        let alphabet = Alphabet::new(["a", "b", "c"].into_iter().take(letters)).unwrap();
        let mut system = RewriteSystem::new(alphabet, MonomialOrder::shortlex(letters), Mode::Semigroup).unwrap();
        for _ in 0..rng.gen_range(1..=4) {
            let (u, v) = (random_word(&mut rng, letters, 4), random_word(&mut rng, letters, 4));
            if u != v {
                system.add_equation(u, v).unwrap();
            }
        }
        if system.is_empty() {
            continue;
        }
        let rules = system.rules().iter().map(|r| (r.lhs.clone(), r.rhs.clone())).collect();
        let p = Presentation {
            mode: PresentationMode::Sgp,
            field: Field::Rational,
            alphabet: system.alphabet().clone(),
            order: system.order().clone(),
            relations: Relations::Rules(rules),
        };
        out.push(instance(format!("random{:02}", out.len()), p));
    }
    out
}

pub fn full_corpus() -> Vec<Instance> {
    let mut all = static_corpus();
    all.extend(random_corpus(12, 0xC0FFEE));
    all
}
