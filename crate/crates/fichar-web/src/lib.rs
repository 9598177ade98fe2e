//! Wasm bindings for the browser demo. Every export takes plain
//! parameters and returns a JSON string; errors come back as
//! `{"error": "…"}` so the page can render them inline.

use wasm_bindgen::prelude::wasm_bindgen;

use fichar::charpoly::build_f_lambda;
use fichar::gamma::{stable_char_poly, stored_decomp, stability_bounds, GammaQuery, Provenance};
use fichar::{Error, Partition};

fn fail(err: &Error) -> String {
    serde_json::json!({ "error": err.to_string() }).to_string()
}

fn compute_char_polynomial(lambda_text: &str) -> Result<serde_json::Value, Error> {
    let lambda: Partition = lambda_text.parse()?;
    if lambda.size() > 10 {
        return Err(Error::MaxSizeExceeded {
            size: lambda.size(),
            max: 10,
        });
    }
    let f = build_f_lambda(&lambda)?;
    let dim = f.dimension_polynomial();
    let valid_from = lambda.size() + lambda.first();
    let dims: Vec<serde_json::Value> = (valid_from..valid_from + 12)
        .map(|s| serde_json::json!({ "s": s, "dim": dim.evaluate(s).to_string() }))
        .collect();
    Ok(serde_json::json!({
        "lambda": lambda.to_string(),
        "falling": f.render_falling_factorials(),
        "expanded": f.to_string(),
        "dimension_poly": dim.to_string(),
        "valid_from": valid_from,
        "dims": dims,
    }))
}

/// The stable character polynomial f_λ of the padded family P(λ), with
/// its dimension polynomial and the first few stable dimensions.
#[wasm_bindgen]
pub fn character_polynomial(lambda: &str) -> String {
    match compute_char_polynomial(lambda) {
        Ok(v) => v.to_string(),
        Err(e) => fail(&e),
    }
}

fn compute_gamma_report(n: usize, i: usize) -> Result<serde_json::Value, Error> {
    if i > 12 || n > 12 {
        return Err(Error::MaxSizeExceeded {
            size: i.max(n),
            max: 12,
        });
    }
    let query = GammaQuery::new(n, i)?;
    let report = stability_bounds(&query)?;
    let mut out = serde_json::json!({
        "n": n,
        "i": i,
        "weight_bound": report.weight_bound,
        "stability_degree": report.stability_degree,
        "stable_range": report.stable_range,
    });
    if let Some(decomp) = stored_decomp(&query) {
        let poly = stable_char_poly(&query)?;
        let dim = poly.dimension_polynomial();
        let dims: Vec<serde_json::Value> = (decomp.valid_from()..decomp.valid_from() + 12)
            .map(|s| serde_json::json!({ "s": s, "dim": dim.evaluate(s).to_string() }))
            .collect();
        out["decomposition"] = serde_json::json!(decomp.to_string());
        out["char_poly"] = serde_json::json!(poly.render_falling_factorials());
        out["dimension_poly"] = serde_json::json!(dim.to_string());
        out["dims"] = serde_json::json!(dims);
    }
    Ok(out)
}

/// Stability bounds for H^i(Γ_{n,s}), plus the exact stable
/// decomposition, character polynomial and dimensions where stored.
#[wasm_bindgen]
pub fn gamma_report(n: usize, i: usize) -> String {
    match compute_gamma_report(n, i) {
        Ok(v) => v.to_string(),
        Err(e) => fail(&e),
    }
}

fn compute_spectral_pages(n: usize, i: usize) -> Result<serde_json::Value, Error> {
    if i > 10 || n > 12 {
        return Err(Error::MaxSizeExceeded {
            size: i.max(n),
            max: 12,
        });
    }
    if n < 2 {
        return Err(Error::RankTooSmall { n });
    }
    let query = GammaQuery::new(n, i)?;
    let report = stability_bounds(&query)?;
    let pages = match &report.provenance {
        Provenance::SpectralRun { pages } => pages,
        Provenance::Rank1 { .. } => unreachable!("rank forced ≥ 2"),
    };
    let window = i.max(6);
    let rendered: Vec<serde_json::Value> = pages
        .iter()
        .map(|grid| {
            let rows: Vec<Vec<String>> = (0..=window)
                .rev()
                .map(|q| {
                    (0..=window)
                        .map(|p| grid.entry(p, q).stype.to_string())
                        .collect()
                })
                .collect();
            serde_json::json!({ "page": grid.page(), "rows": rows })
        })
        .collect();
    Ok(serde_json::json!({
        "n": query.rank(),
        "i": i,
        "window": window,
        "pages": rendered,
        "weight_bound": report.weight_bound,
        "stability_degree": report.stability_degree,
        "stable_range": report.stable_range,
    }))
}

/// The spectral grid pages for H^i(Γ_{n,s}) as (I,S) tables, page 2 up
/// to convergence on the anti-diagonal p + q = i.
#[wasm_bindgen]
pub fn spectral_pages(n: usize, i: usize) -> String {
    match compute_spectral_pages(n, i) {
        Ok(v) => v.to_string(),
        Err(e) => fail(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> serde_json::Value {
        serde_json::from_str(&s).expect("exports emit valid JSON")
    }

    #[test]
    fn character_polynomial_export() {
        let v = parse(character_polynomial("1,1"));
        assert_eq!(v["falling"], "1/2*(X1)_2 - X1 - X2 + 1");
        assert_eq!(v["valid_from"], 3);
        assert_eq!(v["dims"][0]["dim"], "1");
        assert_eq!(v["dims"][2]["dim"], "6");

        let v = parse(character_polynomial("not a partition"));
        assert!(v["error"].is_string());
    }

    #[test]
    fn gamma_report_export() {
        let v = parse(gamma_report(2, 4));
        assert_eq!(v["stable_range"], 6);
        assert_eq!(v["char_poly"], "1/12*(X1)_4 + (X2)_2 - X1*X3");
        assert_eq!(v["dims"][0]["s"], 6);
        assert_eq!(v["dims"][0]["dim"], "30");

        // bounds still come back when no decomposition is stored
        let v = parse(gamma_report(3, 2));
        assert_eq!(v["stable_range"], 5);
        assert!(v.get("char_poly").is_none());

        let v = parse(gamma_report(0, 2));
        assert!(v["error"].is_string());
    }

    #[test]
    fn spectral_pages_export() {
        let v = parse(spectral_pages(2, 4));
        let pages = v["pages"].as_array().unwrap();
        assert_eq!(pages.first().unwrap()["page"], 2);
        assert_eq!(pages.last().unwrap()["page"], 6);
        // top-left cell of the last page: p = 0 ⇒ injectivity 0
        assert_eq!(pages.last().unwrap()["rows"][0][0], "(0,2)");
        // p = 2 column on the last page has injectivity n = 2
        assert_eq!(pages.last().unwrap()["rows"][0][2], "(2,2)");

        let v = parse(spectral_pages(1, 4));
        assert!(v["error"].is_string());
    }
}
