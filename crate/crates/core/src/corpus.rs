//! On-disk corpora: one structure file per structure plus `index.txt`.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::Path;

use crate::canonical::canonical_key;
use crate::enumerate::Dedupe;
use crate::format::write_structure;
use crate::semigroup::LeSemigroup;

pub const INDEX_FILE: &str = "index.txt";
pub const EXTENSION: &str = "lesgp";

/// Characters of the key digest used in file names.
const HASH_CHARS: usize = 16;

/// `(file name, file text)` for each structure, in input order.
///
/// Files are named by the hash of the canonical key. Labeled corpora hold
/// several isomorphic copies, so their names carry the occurrence number.
pub fn corpus_files(structures: &[LeSemigroup], dedupe: Dedupe) -> Vec<(String, String)> {
    let mut seen: HashMap<String, usize> = HashMap::new();
    structures
        .iter()
        .map(|s| {
            let hash = canonical_key(s).digest_hex()[..HASH_CHARS].to_string();
            let name = match dedupe {
                Dedupe::Canonical => format!("{hash}.{EXTENSION}"),
                Dedupe::Labeled => {
                    let k = seen.entry(hash.clone()).or_insert(0);
                    *k += 1;
                    format!("{hash}-{}.{EXTENSION}", *k - 1)
                }
            };
            (name, write_structure(s))
        })
        .collect()
}

pub fn index_text(orders: &[(usize, usize)], dedupe: Dedupe) -> String {
    let mut out = String::from("# lesgp corpus index\n");
    out.push_str(match dedupe {
        Dedupe::Canonical => "dedupe canonical\n",
        Dedupe::Labeled => "dedupe labeled\n",
    });
    for (n, count) in orders {
        out.push_str(&format!("order {n} count {count}\n"));
    }
    out.push_str(&format!(
        "total {}\n",
        orders.iter().map(|(_, c)| c).sum::<usize>()
    ));
    out
}

/// Writes every order's structures into `dir` (created if missing) and the
/// index. Returns the number of files written.
pub fn write_corpus(
    dir: &Path,
    by_order: &[(usize, Vec<LeSemigroup>)],
    dedupe: Dedupe,
) -> io::Result<usize> {
    fs::create_dir_all(dir)?;
    let mut written = 0;
    for (_, structures) in by_order {
        for (name, text) in corpus_files(structures, dedupe) {
            fs::write(dir.join(name), text)?;
            written += 1;
        }
    }
    let counts: Vec<(usize, usize)> = by_order.iter().map(|(n, v)| (*n, v.len())).collect();
    fs::write(dir.join(INDEX_FILE), index_text(&counts, dedupe))?;
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn labeled_copies_get_distinct_names() {
        let s = fixtures::c2_meet();
        let files = corpus_files(&[s.clone(), s], Dedupe::Labeled);
        assert!(files[0].0.ends_with("-0.lesgp"));
        assert!(files[1].0.ends_with("-1.lesgp"));
        assert_eq!(files[0].0[..HASH_CHARS], files[1].0[..HASH_CHARS]);
    }

    #[test]
    fn index_lists_counts() {
        assert_eq!(
            index_text(&[(1, 1), (2, 6)], Dedupe::Canonical),
            "# lesgp corpus index\ndedupe canonical\norder 1 count 1\norder 2 count 6\ntotal 7\n"
        );
    }
}
