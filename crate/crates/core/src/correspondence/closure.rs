use std::collections::HashMap;

use crate::rewriting::RewriteSystem;
use crate::words::{all_words, Word};

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Equivalence classes of the congruence generated by the rules, restricted
/// to words of at most `max_len` letters: every word is joined with every
/// word obtained by applying one rule in either direction, as long as both
/// stay within the bound. Classes are listed by their smallest member
/// (structural order), members in structural order.
///
/// No normal forms are used, so this serves as an independent reference
/// for word-problem answers.
pub fn congruence_classes(system: &RewriteSystem, max_len: usize) -> Vec<Vec<Word>> {
    let min_len = if system.mode().allows_empty() { 0 } else { 1 };
    let words = all_words(system.alphabet().len(), min_len..=max_len);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();

    for (i, w) in words.iter().enumerate() {
        for rule in system.rules() {
            // forward steps; backward steps are the forward steps of the target
            for pos in w.positions_of(&rule.lhs) {
                let target = w.splice(pos, rule.lhs.len(), &rule.rhs);
                if let Some(&j) = index.get(&target) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
    }

    let mut classes: Vec<Vec<Word>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    let mut members: Vec<(usize, &Word)> = words.iter().enumerate().map(|(i, w)| (find(&mut parent, i), w)).collect();
    members.sort_by(|a, b| a.1.cmp(b.1));
    for (root, w) in members {
        let k = *slot.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(w.clone());
    }
    classes
}
