//! Word networks: words are adjacent when one becomes the other by changing,
//! removing or inserting a single letter.
//!
//! Instead of comparing all pairs, every word is keyed by each of its
//! one-letter deletions. Two words of equal length differ in exactly one
//! position `i` iff they share the deletion at `i`; a word is one insertion
//! away from another iff one of its deletions is that other word.

use std::collections::{HashMap, HashSet};
use std::io::BufRead;

use super::LabeledGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, LoopPolicy};

pub const MIN_WORD_LEN: usize = 2;
pub const MAX_WORD_LEN: usize = 8;

/// Builds the edit-distance-one network over `words`, keeping only words of
/// [`MIN_WORD_LEN`] to [`MAX_WORD_LEN`] characters. Vertices follow input
/// order and are labelled with their word. Case is significant.
pub fn word_graph<S: AsRef<str>>(words: &[S]) -> Result<LabeledGraph> {
    let mut seen = HashSet::with_capacity(words.len());
    for w in words {
        if !seen.insert(w.as_ref()) {
            return Err(Error::DuplicateWord(w.as_ref().to_string()));
        }
    }

    let kept: Vec<&str> = words
        .iter()
        .map(AsRef::as_ref)
        .filter(|w| (MIN_WORD_LEN..=MAX_WORD_LEN).contains(&w.chars().count()))
        .collect();
    let index: HashMap<&str, usize> = kept.iter().enumerate().map(|(i, &w)| (w, i)).collect();

    let mut lines = Vec::new();
    let mut same_length: HashMap<(usize, String), Vec<usize>> = HashMap::new();
    for (id, word) in kept.iter().enumerate() {
        let chars: Vec<char> = word.chars().collect();
        for skip in 0..chars.len() {
            let deletion: String = chars
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &c)| c)
                .collect();
            if let Some(&shorter) = index.get(deletion.as_str()) {
                lines.push((id, shorter));
            }
            same_length.entry((skip, deletion)).or_default().push(id);
        }
    }
    for bucket in same_length.values() {
        for (i, &a) in bucket.iter().enumerate() {
            for &b in &bucket[i + 1..] {
                lines.push((a, b));
            }
        }
    }

    let graph = Graph::from_lines(kept.len(), &lines, false, LoopPolicy::Reject)?;
    let labels = kept.into_iter().map(str::to_string).collect();
    Ok(LabeledGraph::new(graph, Some(labels)))
}

/// Reads one word per line, skipping blank lines.
pub fn read_words<R: BufRead>(reader: R) -> Result<Vec<String>> {
    let mut words = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let word = line.trim();
        if !word.is_empty() {
            words.push(word.to_string());
        }
    }
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(words: &[&str]) -> Vec<(String, String)> {
        let lg = word_graph(words).unwrap();
        let labels = lg.labels.as_ref().unwrap();
        lg.graph
            .lines()
            .map(|(u, v)| (labels[u as usize].clone(), labels[v as usize].clone()))
            .collect()
    }

    fn pair(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    #[test]
    fn an_on_ban() {
        assert_eq!(
            edges(&["an", "on", "ban"]),
            [pair("an", "on"), pair("an", "ban")]
        );
    }

    #[test]
    fn length_filter() {
        let lg = word_graph(&["a"]).unwrap();
        assert_eq!(lg.graph.n(), 0);
        let lg = word_graph(&["abcdefghi", "abcdefgh", "ab"]).unwrap();
        assert_eq!(lg.labels.unwrap(), ["abcdefgh", "ab"]);
    }

    #[test]
    fn insertion() {
        assert_eq!(edges(&["cat", "cart"]), [pair("cat", "cart")]);
    }

    #[test]
    fn transposition_is_not_an_edge() {
        assert!(edges(&["ab", "ba"]).is_empty());
    }

    #[test]
    fn case_matters() {
        assert_eq!(
            edges(&["Dan", "dan", "don"]),
            [pair("Dan", "dan"), pair("dan", "don")]
        );
    }

    #[test]
    fn clique_of_substitutions() {
        let lg = word_graph(&["bow", "cow", "how", "low"]).unwrap();
        assert_eq!(lg.graph.m(), 6);
    }

    #[test]
    fn unicode_letters() {
        assert_eq!(edges(&["čaj", "caj"]), [pair("čaj", "caj")]);
    }

    #[test]
    fn duplicates_rejected() {
        let err = word_graph(&["an", "on", "an"]).unwrap_err();
        assert!(matches!(err, Error::DuplicateWord(w) if w == "an"));
    }

    #[test]
    fn reads_words() {
        let words = read_words("an\n\n on \nban\n".as_bytes()).unwrap();
        assert_eq!(words, ["an", "on", "ban"]);
    }
}
