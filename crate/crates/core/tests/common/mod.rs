#![allow(dead_code)]

use kcore::{Graph, LoopPolicy};
use rand::seq::SliceRandom;
use rand::Rng;

/// Erdős–Rényi G(n, p); directed graphs consider every ordered pair.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64, directed: bool) -> Graph {
    let mut lines = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v < u) {
                continue;
            }
            if rng.gen_bool(p) {
                lines.push((u, v));
            }
        }
    }
    Graph::from_lines(n, &lines, directed, LoopPolicy::Reject).unwrap()
}

/// Every undirected simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let lines: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_lines(n, &lines, false, LoopPolicy::Reject).unwrap()
    })
}

/// Textbook dynamic-programming edit distance (substitution, insertion,
/// deletion) over characters.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    for i in 1..=a.len() {
        let mut row = vec![i; b.len() + 1];
        for j in 1..=b.len() {
            let cost = usize::from(a[i - 1] != b[j - 1]);
            row[j] = (prev[j] + 1).min(row[j - 1] + 1).min(prev[j - 1] + cost);
        }
        prev = row;
    }
    prev[b.len()]
}

/// Distinct random words of 2 to 8 letters over a small alphabet, so that
/// many pairs are one edit apart.
pub fn random_words<R: Rng>(rng: &mut R, count: usize, alphabet: &[char]) -> Vec<String> {
    let mut words = std::collections::BTreeSet::new();
    let mut attempts = 0;
    while words.len() < count && attempts < count * 100 {
        attempts += 1;
        let len = rng.gen_range(2..=8usize);
        let len = if rng.gen_bool(0.6) { len.min(4) } else { len };
        let word: String = (0..len).map(|_| *alphabet.choose(rng).unwrap()).collect();
        words.insert(word);
    }
    let mut words: Vec<String> = words.into_iter().collect();
    words.shuffle(rng);
    words
}

pub fn random_label<R: Rng>(rng: &mut R) -> String {
    const CHARS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 _-'.";
    let len = rng.gen_range(0..12);
    let s: String = (0..len)
        .map(|_| *CHARS.choose(rng).unwrap() as char)
        .collect();
    s
}
