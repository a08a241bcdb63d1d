//! Published reference values of `h_{g,μ}` for `g <= 6`, `|μ| <= 6`, stored
//! verbatim, together with the one cell known to be misprinted.

use crate::partition::Partition;
use crate::BigRat;

/// One printed row: profile label and the values for `g = 0, ..., 6`.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub mu: &'static str,
    pub values: [&'static str; 7],
}

const fn row(mu: &'static str, values: [&'static str; 7]) -> TableRow {
    TableRow { mu, values }
}

/// A printed cell that disagrees with the recursion.
#[derive(Clone, Copy, Debug)]
pub struct Erratum {
    pub g: u32,
    pub mu: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub note: &'static str,
}

pub const ERRATA: &[Erratum] = &[Erratum {
    g: 2,
    mu: "(1^3)",
    printed: "264",
    corrected: "364",
    note: "h_{g,(2,1^{n-2})} = h_{g,(1^n)} forces h_{2,(1^3)} = h_{2,(2,1)} = 364; \
           the printed 264 is a typo",
}];

/// Profiles with `|μ| <= 5`.
pub const TABLE_1: &[TableRow] = &[
    row("(1)", ["1", "0", "0", "0", "0", "0", "0"]),
    row("(2)", ["1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"]),
    row("(1^2)", ["1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"]),
    row("(3)", ["1", "9", "81", "729", "6561", "59049", "531441"]),
    row(
        "(2,1)",
        ["4", "40", "364", "3280", "29524", "265720", "2391484"],
    ),
    row(
        "(1^3)",
        ["4", "40", "264", "3280", "29524", "265720", "2391484"],
    ),
    row(
        "(4)",
        [
            "4",
            "160",
            "5824",
            "209920",
            "7558144",
            "272097280",
            "9795518464",
        ],
    ),
    row(
        "(3,1)",
        [
            "27",
            "1215",
            "45927",
            "1673055",
            "60407127",
            "2176250895",
            "78359381127",
        ],
    ),
    row(
        "(2,2)",
        [
            "12",
            "480",
            "17472",
            "629760",
            "22674432",
            "816291840",
            "29386555392",
        ],
    ),
    row(
        "(2,1^2)",
        [
            "120",
            "5460",
            "206640",
            "7528620",
            "271831560",
            "9793126980",
            "352617206880",
        ],
    ),
    row(
        "(1^4)",
        [
            "120",
            "5460",
            "206640",
            "7528620",
            "271831560",
            "9793126980",
            "352617206880",
        ],
    ),
    row(
        "(5)",
        [
            "25",
            "3125",
            "328125",
            "33203125",
            "3330078125",
            "333251953125",
            "33331298828125",
        ],
    ),
    row(
        "(4,1)",
        [
            "256",
            "35840",
            "3956736",
            "409108480",
            "41394569216",
            "4156871147520",
            "416314027933696",
        ],
    ),
    row(
        "(3,2)",
        [
            "216",
            "26460",
            "2748816",
            "277118820",
            "27762350616",
            "2777408868780",
            "277768823459616",
        ],
    ),
    row(
        "(3,1^2)",
        [
            "1620",
            "234360",
            "26184060",
            "2719617120",
            "275661886500",
            "27700994510280",
            "2774997187556940",
        ],
    ),
    row(
        "(2^2,1)",
        [
            "1440",
            "188160",
            "20160000",
            "2059960320",
            "207505858560",
            "20803767828480",
            "2082272553861120",
        ],
    ),
    row(
        "(2,1^3)",
        [
            "8400",
            "1189440",
            "131670000",
            "13626893280",
            "1379375197200",
            "138543794363520",
            "13876390744734000",
        ],
    ),
    row(
        "(1^5)",
        [
            "8400",
            "1189440",
            "131670000",
            "13626893280",
            "1379375197200",
            "138543794363520",
            "13876390744734000",
        ],
    ),
];

/// Profiles with `|μ| = 6`.
pub const TABLE_2: &[TableRow] = &[
    row(
        "(6)",
        [
            "216",
            "68040",
            "16901136",
            "3931876080",
            "895132294056",
            "202252053177720",
            "45575342328002976",
        ],
    ),
    row(
        "(5,1)",
        [
            "3125",
            "1093750",
            "287109375",
            "68750000000",
            "15885009765625",
            "3615783691406250",
            "817717742919921875",
        ],
    ),
    row(
        "(4,2)",
        [
            "2560",
            "788480",
            "192783360",
            "44490434560",
            "10093234511360",
            "2277308480778240",
            "512887872299714560",
        ],
    ),
    row(
        "(4,1^2)",
        [
            "26880",
            "9838080",
            "2638056960",
            "638265788160",
            "148222087453440",
            "33821881625226240",
            "7657985270680120320",
        ],
    ),
    row(
        "(3^2)",
        [
            "1215",
            "357210",
            "86113125",
            "19797948720",
            "4487187539835",
            "1012204758777030",
            "227953607360883345",
        ],
    ),
    row(
        "(3,2,1)",
        [
            "45360",
            "14696640",
            "3710765520",
            "872470478880",
            "199914163328880",
            "45334411650702720",
            "10235275836481639440",
        ],
    ),
    row(
        "(3,1^3)",
        [
            "181440",
            "65998800",
            "17634743280",
            "4259736280800",
            "988561437383520",
            "225514718440830000",
            "51056208831963782160",
        ],
    ),
    row(
        "(2^3)",
        [
            "6720",
            "2016000",
            "486541440",
            "111644332800",
            "25269270586560",
            "5696315163302400",
            "1282471780397902080",
        ],
    ),
    row(
        "(2^2,1^2)",
        [
            "241920",
            "80438400",
            "20589085440",
            "4874762692800",
            "1120875021826560",
            "254613060830419200",
            "57531761566570529280",
        ],
    ),
    row(
        "(2,1^4)",
        [
            "1088640",
            "382536000",
            "100557737280",
            "24109381296000",
            "5576183206513920",
            "1270116357617016000",
            "287353806073982746560",
        ],
    ),
    row(
        "(1^6)",
        [
            "1088640",
            "382536000",
            "100557737280",
            "24109381296000",
            "5576183206513920",
            "1270116357617016000",
            "287353806073982746560",
        ],
    ),
];

/// A single reference cell, resolved against the errata list.
#[derive(Clone, Debug)]
pub struct FixtureCell {
    pub g: u32,
    pub mu: Partition,
    pub printed: BigRat,
    /// The value the computation must reproduce (differs from `printed` only for errata).
    pub expected: BigRat,
    pub erratum: Option<&'static Erratum>,
}

fn parse_rat(s: &str) -> BigRat {
    s.parse().expect("fixture values are valid fractions")
}

/// Flattens a table into cells, row by row.
pub fn cells(table: &[TableRow]) -> Vec<FixtureCell> {
    let mut out = Vec::new();
    for row in table {
        let mu: Partition = row.mu.parse().expect("fixture labels parse");
        for (g, v) in row.values.iter().enumerate() {
            let g = g as u32;
            let erratum = ERRATA
                .iter()
                .find(|e| e.g == g && e.mu.parse::<Partition>().ok().as_ref() == Some(&mu));
            let printed = parse_rat(v);
            let expected = match erratum {
                Some(e) => {
                    assert_eq!(e.printed, *v);
                    parse_rat(e.corrected)
                }
                None => printed.clone(),
            };
            out.push(FixtureCell {
                g,
                mu: mu.clone(),
                printed,
                expected,
                erratum,
            });
        }
    }
    out
}

/// Every cell of both tables.
pub fn all_cells() -> Vec<FixtureCell> {
    let mut v = cells(TABLE_1);
    v.extend(cells(TABLE_2));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(TABLE_1.len(), 18);
        assert_eq!(TABLE_2.len(), 11);
        assert_eq!(cells(TABLE_1).len(), 126);
        assert_eq!(cells(TABLE_2).len(), 77);
        let mut seen: Vec<Partition> = TABLE_1
            .iter()
            .chain(TABLE_2)
            .map(|r| r.mu.parse().unwrap())
            .collect();
        let n = seen.len();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), n);
        for r in TABLE_2 {
            assert_eq!(r.mu.parse::<Partition>().unwrap().size(), 6);
        }
    }

    #[test]
    fn single_erratum() {
        let flagged: Vec<_> = all_cells()
            .into_iter()
            .filter(|c| c.erratum.is_some())
            .collect();
        assert_eq!(flagged.len(), 1);
        assert_eq!(flagged[0].g, 2);
        assert_eq!(flagged[0].mu, Partition::column(3));
        assert_eq!(flagged[0].printed, BigRat::from_integer(264.into()));
        assert_eq!(flagged[0].expected, BigRat::from_integer(364.into()));
    }
}
