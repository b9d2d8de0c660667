use comtet::engine::distribution_matrix;
use comtet::genfun::{closed_form, SUPPORTED};
use comtet::json::{self, CoeffJson, MatrixJson};
use comtet::perm::patterns;

#[test]
fn every_closed_form_round_trips() {
    for key in SUPPORTED {
        let s = closed_form(&patterns(key), 6).unwrap();
        let parsed: Vec<CoeffJson> = serde_json::from_str(&json::series_string(&s)).unwrap();
        assert_eq!(parsed.len(), 7, "{key}");
        assert_eq!(json::series_from_json(&parsed).unwrap(), s, "{key}");
    }
}

#[test]
fn matrices_round_trip() {
    for key in ["2413,3142", "132", "123,321"] {
        let p = patterns(key);
        for n in 1..=6 {
            let m = distribution_matrix(n, &p).unwrap();
            let back: MatrixJson = serde_json::from_str(&json::matrix_string(&p, &m)).unwrap();
            assert_eq!(back.n, n);
            assert_eq!(back.matrix().unwrap(), m);
        }
    }
}
