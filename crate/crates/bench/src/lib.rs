//! Synthetic workloads for the benchmarks.

use belnap_core::database::{parse_database_file, DatabaseFile};

/// A key-value table `P(key, value)` with a functional dependency from key
/// to value. Each of the `keys` keys gets `values_per_key` distinct values,
/// so every key with more than one value is a conflict.
pub fn key_conflicts(keys: usize, values_per_key: usize) -> DatabaseFile {
    let mut text = String::new();
    let key_names: Vec<String> = (1..=keys).map(|i| format!("k{i}")).collect();
    let value_names: Vec<String> = (1..=values_per_key).map(|i| format!("v{i}")).collect();
    text.push_str(&format!(
        "const {} {}\n",
        key_names.join(" "),
        value_names.join(" ")
    ));
    text.push_str("pred P/2\n");
    for k in &key_names {
        for v in &value_names {
            text.push_str(&format!("fact P({k},{v})\n"));
        }
    }
    text.push_str("constraint forall x,y,y'. P(x,y) & P(x,y') => y == y'\n");
    text.push_str("query has_value(x) :- exists y. P(x,y)\n");
    text.push_str("query value(x,y) :- P(x,y)\n");
    parse_database_file(&text).expect("generated text is well formed")
}

/// A chain `E(c1,c2), E(c2,c3), ...` of `length` edges, consistent with a
/// constraint forbidding self-loops.
pub fn chain(length: usize) -> DatabaseFile {
    let names: Vec<String> = (1..=length + 1).map(|i| format!("c{i}")).collect();
    let mut text = format!("const {}\npred E/2\n", names.join(" "));
    for pair in names.windows(2) {
        text.push_str(&format!("fact E({},{})\n", pair[0], pair[1]));
    }
    text.push_str("constraint forall x. ~E(x,x)\n");
    text.push_str("query two_step(x,z) :- exists y. E(x,y) & E(y,z)\n");
    parse_database_file(&text).expect("generated text is well formed")
}
