"""
Sample Data
Published HDFC Bank monthly averages with their components, and the
per-holding component summaries of eight Indian equity funds. Used as
regression fixtures by the test-suite.
"""

from collections import namedtuple

# Monthly average prices, January 2008 - December 2015
HDFC_START = (2008, 1)
HDFC_AGGREGATES = [
    328, 299, 268, 279, 289, 230, 209, 243, 252, 218, 194, 192, 192, 179, 175,
    215, 256, 296, 287, 288, 303, 335, 344, 347, 339, 326, 367, 391, 380, 387,
    405, 428, 470, 476, 470, 454, 432, 416, 442, 471, 454, 475, 504, 466, 474,
    470, 459, 439, 467, 519, 514, 536, 510, 535, 581, 596, 607, 630, 654, 685,
    667, 656, 631, 653, 703, 660, 663, 600, 625, 658, 657, 673, 663, 652, 724,
    728, 779, 824, 833, 823, 857, 884, 927, 941, 1000, 1064, 1051, 1020, 1004,
    1026, 1096, 1068, 1029, 1094, 1068, 1067
]

# Published trend column (None where the 12-month window does not fit)
HDFC_TREND = [
    None, None, None, None, None, None, 244, 234, 225, 218, 214, 216, 222, 227,
    231, 238, 249, 262, 274, 286, 301, 316, 328, 337, 346, 357, 370, 382, 394,
    403, 412, 419, 426, 433, 439, 446, 454, 459, 461, 461, 460, 459, 460, 466,
    473, 479, 484, 489, 494, 503, 514, 526, 541, 559, 578, 592, 602, 612, 625,
    638, 647, 651, 652, 653, 655, 654, 654, 653, 657, 664, 670, 680, 694, 711,
    730, 749, 769, 792, 817, 848, 879, 905, 926, 944, 963, 985, 1002, 1018,
    1033, 1044, None, None, None, None, None, None
]

# Published seasonal figures, January .. December
HDFC_SEASONAL_FIGURES = [-7, -10, -6, 0, 0, 6, 8, -6, 5, 8, 4, -1]

# Published random column. The July - November 2008 cells sit one row above
# where aggregate - trend - seasonal puts them and December 2008 is blank, so
# only January 2009 onwards is usable for comparison.
HDFC_RANDOM = [
    None, None, None, None, None, -43, 15, 22, -8, -24, -23, None, -23, -38,
    -50, -23, 8, 28, 5, 8, -3, 11, 11, 11, 0, -21, 4, 9, -13, -22, -14, 15, 39,
    35, 27, 9, -15, -33, -13, 10, -6, 10, 36, 6, -4, -17, -29, -48, -20, 26, 6,
    10, -30, -30, -5, 10, -1, 10, 25, 48, 27, 15, -14, 0, 49, 0, 2, -47, -37,
    -14, -17, -6, -24, -49, 1, -20, 10, 26, 8, -19, -27, -29, -3, -2, 44, 89,
    55, 2, -28, -24, None, None, None, None, None, None
]
HDFC_RANDOM_COMPARABLE_FROM = 12

# trend (max, min, mean), seasonal (max, min, mean_abs), random (max, min, mean_abs)
HDFC_SUMMARY = ((132, 89, 101), (4, -6, 1), (9, -19, 5))

SummaryRow = namedtuple(
    "SummaryRow",
    "stock t_max t_min t_mean s_max s_min s_mean r_max r_min r_mean dominant",
)

FundCase = namedtuple(
    "FundCase",
    "name style capitalization sectors rows whitelist expected_deviations",
)


def _rows(raw):
    return [SummaryRow(*r) for r in raw]


FUND_CASES = [
    FundCase(
        name="UTI Infrastructure Fund",
        style="blend",
        capitalization="medium",
        sectors=["construction", "engineering", "financial", "energy", "consumer durable",
                 "services", "diversified", "automobile", "communication", "chemicals"],
        rows=_rows([
            ("ABB", 151, 83, 103, 10, -10, 4, 16, -45, 28, "T + R"),
            ("Adani Ports & Special", 146, 75, 102, 5, -15, 3, 20, -31, 17, "T + R"),
            ("Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"),
            ("Bharat Forge", 178, 76, 105, 29, -22, 16, 18, -62, 21, "T + R + S"),
            ("Blue Star", 168, 79, 104, 29, -21, 23, 16, -56, 11, "T + S"),
            ("Container Corporation", 123, 88, 101, 25, -13, 22, 21, -19, 18, "T + S + R"),
            ("ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"),
            ("Kalpataru Power Trans.", 196, 77, 106, 13, -19, 4, 28, -93, 22, "T + R"),
            ("Larsen & Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 9, "T"),
            ("Reliance Industries", 142, 84, 102, 5, -6, 3, 13, -39, 6, "T"),
            ("State Bank of India", 140, 84, 102, 4, -10, 2, 14, -31, 8, "T"),
            ("Ultratech Cement", 153, 84, 102, 28, -12, 22, 24, -47, 18, "T + S + R"),
            ("Voltas", 218, 82, 106, 31, -37, 25, 59, -89, 13, "T + S"),
        ]),
        # logistics, forgings and cement are infrastructure suppliers; their
        # seasonality is accepted
        whitelist={
            "Container Corporation": "logistics provider for infrastructure projects",
            "Bharat Forge": "infrastructure engineering supplier",
            "Ultratech Cement": "infrastructure construction material",
        },
        expected_deviations={"Voltas", "Blue Star"},
    ),
    FundCase(
        name="ICICI Prudential Infrastructure Fund",
        style="blend",
        capitalization="medium",
        sectors=["energy", "construction", "engineering", "financial", "services",
                 "diversified", "metals", "communication", "banking and financial services",
                 "oil and gas"],
        rows=_rows([
            ("Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"),
            ("CESC", 142, 85, 102, 8, -8, 3, 22, -41, 20, "T + R"),
            ("Coal India", 119, 84, 100, 9, -7, 3, 24, -14, 20, "T + R"),
            ("Container Corporation", 123, 88, 101, 25, -13, 22, 21, -19, 18, "T + S + R"),
            ("FAG Bearings India", 131, 85, 103, 13, -16, 2, 15, -30, 18, "T + R"),
            ("Grasim Industries", 160, 83, 102, 6, -4, 2, 19, -56, 8, "T"),
            ("ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"),
            ("Kalpataru Power Trans.", 196, 77, 106, 13, -19, 4, 28, -93, 22, "T + R"),
            ("Larsen and Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 19, "T + R"),
            ("ONGC", 130, 82, 101, 7, -8, 4, 32, -22, 21, "T + R"),
            ("Power Grid Corp", 121, 87, 101, 4, -5, 2, 9, -16, 4, "T"),
        ]),
        whitelist={"Container Corporation": "logistics provider for infrastructure projects"},
        expected_deviations=set(),
    ),
    FundCase(
        name="Axis Midcap Fund",
        style="growth",
        capitalization="medium",
        sectors=["financial", "services", "engineering", "healthcare", "energy",
                 "chemicals", "technology", "FMCG", "textiles", "metals"],
        rows=_rows([
            ("City Union Bank", 144, 84, 103, 12, -11, 2, 16, -40, 8, "T"),
            ("CRISIL", 131, 85, 101, 18, -20, 5, 10, -17, 6, "T"),
            ("Dish TV India", 175, 80, 104, 9, -17, 3, 21, -75, 10, "T"),
            ("NIIT", 205, 72, 97, 39, -26, 8, 36, -88, 26, "T + R"),
            ("Page Industries", 130, 10, 101, 26, -26, 5, 34, -35, 19, "T + R"),
            ("Procter and Gamble", 123, 87, 101, 7, -9, 1, 13, -23, 6, "T"),
            ("PVR", 146, 81, 104, 34, -28, 9, 23, -80, 11, "T"),
            ("Sanofi India", 115, 91, 101, 11, -6, 2, 8, -30, 4, "T"),
            ("Sundaram Finance", 139, 78, 102, 17, -10, 3, 24, -31, 8, "T"),
            ("Torrent Power", 169, 81, 104, 7, -14, 3, 39, -54, 29, "T + R"),
        ]),
        whitelist={},
        expected_deviations=set(),
    ),
    FundCase(
        name="ICICI Prudential Value Discovery Fund",
        style="blend",
        capitalization="large",
        sectors=["financial", "energy", "automobile", "diversified", "construction",
                 "services", "technology", "engineering", "chemicals", "healthcare"],
        rows=_rows([
            ("Amara Raja Batteries", 194, 85, 105, 79, -48, 9, 24, -147, 25, "T + R"),
            ("Ambuja Cement", 134, 87, 101, 5, -4, 1, 13, -34, 7, "T"),
            ("Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"),
            ("Bharat Forge", 178, 76, 105, 29, -22, 16, 18, -62, 21, "T + R + S"),
            ("Bharti Airtel", 122, 85, 101, 9, -7, 3, 14, -24, 6, "T"),
            ("Container Corporation", 123, 88, 101, 25, -13, 22, 21, -19, 18, "T + S + R"),
            ("HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"),
            ("Hero Motocorp", 118, 87, 101, 9, -12, 3, 12, -35, 18, "T + R"),
            ("ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"),
            ("Larsen and Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 19, "T + R"),
            ("Mahindra & Mahindra", 163, 84, 103, 20, -29, 29, 11, -70, 7, "T + S"),
            ("State Bank of India", 140, 84, 102, 4, -10, 2, 14, -31, 8, "T"),
            ("Tata Motors", 187, 80, 105, 35, -28, 6, 24, -12, 14, "T"),
        ]),
        whitelist={},
        expected_deviations=set(),
    ),
    FundCase(
        name="ICICI Prudential Focused Bluechip Equity Fund",
        style="growth",
        capitalization="large",
        sectors=["financial", "technology", "energy", "automobile", "healthcare",
                 "FMCG", "diversified", "communication", "construction", "metals"],
        rows=_rows([
            ("Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"),
            ("Bharti Airtel", 122, 85, 101, 9, -7, 3, 14, -24, 6, "T"),
            ("Coal India", 119, 84, 100, 9, -7, 3, 24, -14, 20, "T + R"),
            ("Divi's Laboratories", 127, 87, 101, 6, -9, 3, 12, -12, 6, "T"),
            ("Grasim Industries", 160, 83, 102, 6, -4, 2, 19, -56, 8, "T"),
            ("HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"),
            ("ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"),
            ("Infosys", 124, 89, 101, 13, -12, 4, 14, -31, 6, "T"),
            ("ITC", 113, 91, 101, 6, -6, 2, 10, -17, 3, "T"),
            ("Kotak Mahindra Bank", 181, 83, 103, 7, -20, 2, 14, -69, 18, "T + R"),
            ("Larsen and Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 19, "T + R"),
            ("Mahindra & Mahindra", 163, 84, 103, 20, -29, 29, 11, -70, 7, "T + S"),
            ("Motherson Sumi Sys", 124, 85, 102, 9, -11, 2, 16, -24, 8, "T"),
            ("Power Grid Corp.", 121, 87, 101, 4, -5, 2, 9, -16, 4, "T"),
            ("Reliance Industries", 142, 84, 102, 5, -6, 3, 13, -39, 6, "T"),
            ("Tata Motors", 187, 80, 105, 35, -28, 6, 24, -12, 14, "T"),
        ]),
        whitelist={},
        expected_deviations={"Mahindra & Mahindra"},
    ),
    FundCase(
        name="UTI Long Term Equity Fund",
        style="growth",
        capitalization="large",
        sectors=["financial", "technology", "energy", "healthcare", "services",
                 "engineering", "construction", "FMCG", "automobile"],
        rows=_rows([
            ("Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"),
            ("Bharti Airtel", 122, 85, 101, 9, -7, 3, 14, -24, 6, "T"),
            ("HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"),
            ("Hero Motocorp", 118, 87, 101, 9, -12, 3, 12, -35, 18, "T + R"),
            ("ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"),
            ("Infosys", 124, 89, 101, 13, -12, 4, 14, -31, 6, "T"),
            ("ITC", 113, 91, 101, 6, -6, 2, 10, -17, 3, "T"),
            ("Larsen and Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 19, "T + R"),
            ("ONGC", 130, 82, 101, 7, -8, 4, 32, -22, 21, "T + R"),
            ("Reliance Industries", 142, 84, 102, 5, -6, 3, 13, -39, 6, "T"),
            ("State Bank of India", 140, 84, 102, 4, -10, 2, 14, -31, 8, "T"),
            ("Sun Pharmaceuticals", 117, 86, 101, 9, -15, 3, 28, -19, 26, "T + R"),
            ("TCS", 131, 88, 102, 10, -16, 3, 10, -34, 6, "T"),
        ]),
        whitelist={},
        expected_deviations=set(),
    ),
    FundCase(
        name="Reliance Small Cap Fund",
        style="growth",
        capitalization="small",
        sectors=["chemicals", "construction", "engineering", "technology", "financial",
                 "FMCG", "textiles", "healthcare", "services", "communication"],
        rows=_rows([
            ("Atul Industries", 151, 77, 78, 86, -126, 12, 102, -10, 42, "R + T"),
            ("Chambal Fertilizers", 140, 72, 82, 11, -10, 3, 45, -38, 32, "R + T"),
            ("Cyient Technology", 187, 80, 94, 26, -11, 4, 48, -90, 28, "R + T"),
            ("Genus Power", 211, 68, 98, 22, -25, 7, 61, -111, 35, "R + T"),
            ("GIC Housing Finance", 160, 76, 93, 19, 18, 3, 46, -49, 32, "R + T"),
            ("HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"),
            ("Kalpataru Power Trans", 196, 77, 106, 13, -19, 4, 28, -93, 22, "T + R"),
            ("Navin Fluorine Intl", 180, 80, 95, 15, -23, 5, 32, -57, 22, "R + T"),
            ("NIIT", 205, 72, 97, 39, -26, 8, 36, -88, 26, "R + T"),
            ("Radico Khaitan", 132, 81, 92, 8, -12, 4, 31, -32, 18, "R + T"),
            ("VIP Industries", 170, 73, 97, 120, -75, 10, 96, -140, 34, "R + T"),
        ]),
        whitelist={},
        expected_deviations={"HDFC Bank"},
    ),
    FundCase(
        name="UTI Bluechip Flexicap Fund",
        style="growth",
        capitalization="large",
        sectors=["financial", "healthcare", "technology", "FMCG", "automobile",
                 "engineering", "services", "chemicals", "construction", "metals"],
        rows=_rows([
            ("Amara Raja Batteries", 194, 85, 105, 79, -48, 9, 24, -147, 25, "T + R"),
            ("Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"),
            ("Divi's Laboratories", 127, 87, 101, 6, -9, 3, 12, -12, 6, "T"),
            ("eClerx Services", 167, 87, 105, 40, -31, 5, 29, -106, 22, "T + R"),
            ("Havells India", 191, 86, 105, 14, -55, 4, 19, -83, 11, "T"),
            ("HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"),
            ("Hero Motocorp", 118, 87, 101, 9, -12, 3, 12, -25, 18, "T + R"),
            ("Hindustan Zinc", 148, 81, 102, 10, -9, 2, 18, -44, 8, "T"),
            ("ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"),
            ("Infosys", 124, 89, 101, 13, -12, 4, 14, -31, 6, "T"),
            ("ITC", 113, 91, 101, 6, -6, 2, 10, -17, 3, "T"),
            ("Kotak Mahindra Bank", 181, 83, 103, 7, -20, 2, 14, -69, 18, "T + R"),
            ("MindTree", 154, 84, 103, 20, -16, 5, 19, -69, 10, "T"),
            ("Motherson Sumi Sys", 124, 85, 102, 9, -11, 2, 16, -24, 8, "T"),
            ("Page Industries", 130, 10, 101, 26, -26, 5, 34, -35, 19, "T + R"),
            ("Sun Pharmaceuticals", 117, 86, 101, 9, -15, 3, 28, -19, 26, "T + R"),
            ("TCS", 131, 88, 102, 10, -16, 3, 10, -34, 6, "T"),
            ("Torrent Pharma", 125, 80, 102, 16, -26, 3, 15, -31, 6, "T"),
        ]),
        whitelist={},
        expected_deviations=set(),
    ),
]

# Deviations of the focused bluechip fund when random is flagged as well
STRICT_BLUECHIP_DEVIATIONS = {
    "Coal India", "Kotak Mahindra Bank", "Larsen and Toubro", "Mahindra & Mahindra",
}

# Cells that look misprinted; never asserted
SUSPECT_CELLS = {
    ("Page Industries", "t_min"),
    ("GIC Housing Finance", "s_min"),
    ("GIC Housing Finance", "s_max"),
}


def fund_case(name):
    for case in FUND_CASES:
        if case.name == name:
            return case
    raise KeyError(name)
