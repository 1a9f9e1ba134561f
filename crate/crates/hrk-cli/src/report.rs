//! Report emission: the stable JSON schema and the fixed-width table form.

use serde::{Deserialize, Serialize};

use hrk_core::hrkengine::HrkReport;

/// Wire form of a homogeneity rank report. Field order is the schema.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WireReport {
    pub space: String,
    pub dim_g: i64,
    pub rank_g: i64,
    pub dim_isotropy: i64,
    pub rank_isotropy: i64,
    pub cohomogeneity: i64,
    pub hrk: i64,
    pub seeds: Vec<u64>,
    pub samples_agreed: bool,
    pub derived_series_dims: Vec<usize>,
}

impl WireReport {
    pub fn from_report(r: &HrkReport) -> Self {
        WireReport {
            space: r.space.label(),
            dim_g: r.dim_g,
            rank_g: r.rank_g,
            dim_isotropy: r.dim_isotropy,
            rank_isotropy: r.rank_isotropy,
            cohomogeneity: r.cohomogeneity,
            hrk: r.hrk,
            seeds: r.seeds.clone(),
            samples_agreed: r.samples_agreed,
            derived_series_dims: r.derived_series_dims.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let dims: Vec<String> = self.derived_series_dims.iter().map(|d| d.to_string()).collect();
        let seeds: Vec<String> = self.seeds.iter().map(|s| s.to_string()).collect();
        let rows = [
            ("space", self.space.clone()),
            ("dim_g", self.dim_g.to_string()),
            ("rank_g", self.rank_g.to_string()),
            ("dim_isotropy", self.dim_isotropy.to_string()),
            ("rank_isotropy", self.rank_isotropy.to_string()),
            ("cohomogeneity", self.cohomogeneity.to_string()),
            ("hrk", self.hrk.to_string()),
            ("seeds", seeds.join(",")),
            ("samples_agreed", self.samples_agreed.to_string()),
            ("derived_series_dims", dims.join(",")),
        ];
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<22} {v}\n"));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_preserves_every_field() {
        let w = WireReport {
            space: "hp(6)".into(),
            dim_g: 18,
            rank_g: 6,
            dim_isotropy: 2,
            rank_isotropy: 2,
            cohomogeneity: 4,
            hrk: 0,
            seeds: vec![1, 2, 3],
            samples_agreed: true,
            derived_series_dims: vec![2, 0],
        };
        let json = w.to_json();
        let back: WireReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        // the schema keys appear in order
        let pos = |k: &str| json.find(k).unwrap();
        assert!(pos("space") < pos("dim_g"));
        assert!(pos("dim_g") < pos("rank_g"));
        assert!(pos("cohomogeneity") < pos("hrk"));
        assert!(pos("samples_agreed") < pos("derived_series_dims"));
    }
}
