"""Static region-name to ISO 3166-1 alpha-2 resolution.

Google Trends region exports key rows by display name ("United States"),
while the rest of the pipeline works with ISO codes.  The table below covers
the locations in the bundled dataset plus the usual suspects; unknown names
resolve to None and are reported by callers as warnings, never guessed.
"""

from __future__ import annotations

from .timeseries import GEO_WORLD

CODE_TO_NAME = {
    "AE": "United Arab Emirates",
    "AL": "Albania",
    "AR": "Argentina",
    "AT": "Austria",
    "AU": "Australia",
    "BA": "Bosnia and Herzegovina",
    "BD": "Bangladesh",
    "BE": "Belgium",
    "BG": "Bulgaria",
    "BO": "Bolivia",
    "BR": "Brazil",
    "BY": "Belarus",
    "CA": "Canada",
    "CH": "Switzerland",
    "CL": "Chile",
    "CN": "China",
    "CO": "Colombia",
    "CR": "Costa Rica",
    "CU": "Cuba",
    "CY": "Cyprus",
    "CZ": "Czechia",
    "DE": "Germany",
    "DK": "Denmark",
    "DO": "Dominican Republic",
    "DZ": "Algeria",
    "EC": "Ecuador",
    "EE": "Estonia",
    "EG": "Egypt",
    "ES": "Spain",
    "ET": "Ethiopia",
    "FI": "Finland",
    "FJ": "Fiji",
    "FR": "France",
    "GB": "United Kingdom",
    "GH": "Ghana",
    "GR": "Greece",
    "GT": "Guatemala",
    "HK": "Hong Kong",
    "HN": "Honduras",
    "HR": "Croatia",
    "HU": "Hungary",
    "ID": "Indonesia",
    "IE": "Ireland",
    "IL": "Israel",
    "IN": "India",
    "IQ": "Iraq",
    "IR": "Iran",
    "IS": "Iceland",
    "IT": "Italy",
    "JM": "Jamaica",
    "JO": "Jordan",
    "JP": "Japan",
    "KE": "Kenya",
    "KH": "Cambodia",
    "KR": "South Korea",
    "KW": "Kuwait",
    "KZ": "Kazakhstan",
    "LA": "Laos",
    "LB": "Lebanon",
    "LK": "Sri Lanka",
    "LT": "Lithuania",
    "LU": "Luxembourg",
    "LV": "Latvia",
    "MA": "Morocco",
    "MD": "Moldova",
    "ME": "Montenegro",
    "MK": "North Macedonia",
    "MM": "Myanmar",
    "MN": "Mongolia",
    "MT": "Malta",
    "MX": "Mexico",
    "MY": "Malaysia",
    "NG": "Nigeria",
    "NI": "Nicaragua",
    "NL": "Netherlands",
    "NO": "Norway",
    "NP": "Nepal",
    "NZ": "New Zealand",
    "OM": "Oman",
    "PA": "Panama",
    "PE": "Peru",
    "PG": "Papua New Guinea",
    "PH": "Philippines",
    "PK": "Pakistan",
    "PL": "Poland",
    "PR": "Puerto Rico",
    "PT": "Portugal",
    "PY": "Paraguay",
    "QA": "Qatar",
    "RO": "Romania",
    "RS": "Serbia",
    "RU": "Russia",
    "SA": "Saudi Arabia",
    "SE": "Sweden",
    "SG": "Singapore",
    "SI": "Slovenia",
    "SK": "Slovakia",
    "SV": "El Salvador",
    "TH": "Thailand",
    "TN": "Tunisia",
    "TR": "Turkey",
    "TT": "Trinidad and Tobago",
    "TW": "Taiwan",
    "UA": "Ukraine",
    "US": "United States",
    "UY": "Uruguay",
    "VE": "Venezuela",
    "VN": "Vietnam",
    "ZA": "South Africa",
}

# Spellings Google Trends (and humans) use that differ from the table above.
ALIASES = {
    "worldwide": GEO_WORLD,
    "global": GEO_WORLD,
    "czech republic": "CZ",
    "uk": "GB",
    "great britain": "GB",
    "usa": "US",
    "united states of america": "US",
    "republic of korea": "KR",
    "korea": "KR",
    "viet nam": "VN",
    "russian federation": "RU",
    "turkiye": "TR",
    "myanmar (burma)": "MM",
    "burma": "MM",
    "macedonia": "MK",
    "trinidad & tobago": "TT",
    "bosnia & herzegovina": "BA",
}

_NAME_TO_CODE = {name.lower(): code for code, name in CODE_TO_NAME.items()}
_NAME_TO_CODE.update(ALIASES)


def resolve_region(name: str) -> str | None:
    """ISO code for a region display name, or None if unknown.

    Accepts display names, the aliases above, and strings that already are
    known ISO codes (or the WORLD sentinel).
    """
    cleaned = " ".join(name.split())
    if not cleaned:
        return None
    if cleaned == GEO_WORLD or cleaned.upper() == GEO_WORLD:
        return GEO_WORLD
    if len(cleaned) == 2 and cleaned.upper() in CODE_TO_NAME:
        return cleaned.upper()
    return _NAME_TO_CODE.get(cleaned.lower())


def region_name(code: str) -> str:
    """Display name for an ISO code; the code itself if unknown."""
    if code == GEO_WORLD:
        return "Worldwide"
    return CODE_TO_NAME.get(code, code)
