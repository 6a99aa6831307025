use orthopair::{ClassificationResult, OrderKind};
use serde_json::json;

/// Fixed 12 decimals with trailing zeros dropped, so `0.8²` prints as
/// `0.64` rather than its shortest round-trip form.
pub fn num(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub fn ifv_text(mu: f64, nu: f64) -> String {
    format!("⟨{}, {}⟩", num(mu), num(nu))
}

pub fn classification_text(result: &ClassificationResult, order: OrderKind) -> String {
    let width = result
        .ranking
        .iter()
        .map(|(l, _)| l.chars().count())
        .max()
        .unwrap_or(0)
        .max("pattern".len());
    let mut out = format!("order: {order}\n{:<width$}  similarity\n", "pattern");
    for (label, s) in &result.ranking {
        out.push_str(&format!("{label:<width$}  {s:.4}\n"));
    }
    out.push_str(&format!("winner: {}", result.winner));
    out
}

pub fn classification_json(result: &ClassificationResult, order: OrderKind) -> String {
    let ranking: Vec<_> = result
        .ranking
        .iter()
        .map(|(label, s)| json!({"pattern": label, "similarity": s}))
        .collect();
    let value = json!({
        "order": order.to_string(),
        "ranking": ranking,
        "winner": result.winner,
    });
    serde_json::to_string_pretty(&value).expect("report is plain JSON")
}
