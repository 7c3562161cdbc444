#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "menage/core.hpp"
#include "menage/exact_integer.hpp"

namespace menage::output {

/// One emitted term of the Touchard sum, all big values as decimal strings.
struct TermRecord {
    unsigned long r = 0;
    std::string domino_count;
    int sign = 1;
    std::string tail_factorial;
    std::string term;

    friend bool operator==(const TermRecord&, const TermRecord&) = default;
};

/// One table row; decimal strings round-trip losslessly to ExactInteger.
struct OutputRecord {
    unsigned long n = 0;
    std::string tait;
    std::string menage;
    std::optional<std::vector<TermRecord>> terms;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Builds the row for one n on the incremental path; the term decomposition,
/// when requested, is cross-checked against the incremental total.
inline OutputRecord build_record(unsigned long n, bool include_terms) {
    OutputRecord record;
    record.n = n;
    ExactInteger tait = tait_count_incremental(n);
    record.tait = to_decimal(tait);
    record.menage = to_decimal(ExactInteger(ExactInteger(2) * factorial(n) * tait));
    if (include_terms) {
        TouchardBreakdown<ExactInteger> breakdown = tait_breakdown(n);
        if (breakdown.total != tait) {
            throw std::logic_error("build_record: term decomposition disagrees with incremental total");
        }
        std::vector<TermRecord> terms;
        terms.reserve(breakdown.terms.size());
        for (const auto& t : breakdown.terms) {
            terms.push_back({t.r, to_decimal(t.domino_count), t.sign, to_decimal(t.tail_factorial),
                             to_decimal(t.term_value)});
        }
        record.terms = std::move(terms);
    }
    return record;
}

inline std::vector<OutputRecord> build_table(unsigned long from, unsigned long to,
                                             bool include_terms) {
    if (from < 2) {
        throw std::domain_error("table: range must start at n >= 2");
    }
    if (to < from) {
        throw std::domain_error("table: range is empty (from > to)");
    }
    std::vector<OutputRecord> records;
    records.reserve(to - from + 1);
    for (unsigned long n = from; n <= to; ++n) {
        records.push_back(build_record(n, include_terms));
    }
    return records;
}

/// "n,tait,menage" rows; the term decomposition has no csv representation.
inline std::string render_csv(const std::vector<OutputRecord>& records) {
    std::string out = "n,tait,menage\n";
    for (const OutputRecord& r : records) {
        out += std::to_string(r.n);
        out += ',';
        out += r.tait;
        out += ',';
        out += r.menage;
        out += '\n';
    }
    return out;
}

inline std::string render_json(const std::vector<OutputRecord>& records) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const OutputRecord& r : records) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["tait"] = r.tait;
        row["menage"] = r.menage;
        if (r.terms) {
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const TermRecord& t : *r.terms) {
                nlohmann::ordered_json term;
                term["r"] = t.r;
                term["domino_count"] = t.domino_count;
                term["sign"] = t.sign;
                term["tail_factorial"] = t.tail_factorial;
                term["term"] = t.term;
                terms.push_back(std::move(term));
            }
            row["terms"] = std::move(terms);
        }
        array.push_back(std::move(row));
    }
    return array.dump(2) + "\n";
}

inline std::vector<OutputRecord> parse_json(const std::string& text) {
    nlohmann::json array = nlohmann::json::parse(text);
    std::vector<OutputRecord> records;
    for (const auto& row : array) {
        OutputRecord record;
        record.n = row.at("n").get<unsigned long>();
        record.tait = row.at("tait").get<std::string>();
        record.menage = row.at("menage").get<std::string>();
        if (row.contains("terms")) {
            std::vector<TermRecord> terms;
            for (const auto& term : row.at("terms")) {
                terms.push_back({term.at("r").get<unsigned long>(),
                                 term.at("domino_count").get<std::string>(),
                                 term.at("sign").get<int>(),
                                 term.at("tail_factorial").get<std::string>(),
                                 term.at("term").get<std::string>()});
            }
            record.terms = std::move(terms);
        }
        records.push_back(std::move(record));
    }
    return records;
}

inline std::string render_text(const std::vector<OutputRecord>& records) {
    std::size_t n_width = 1, tait_width = 4, menage_width = 6;
    for (const OutputRecord& r : records) {
        n_width = std::max(n_width, std::to_string(r.n).size());
        tait_width = std::max(tait_width, r.tait.size());
        menage_width = std::max(menage_width, r.menage.size());
    }
    std::ostringstream out;
    out << std::setw(static_cast<int>(n_width)) << "n" << "  "
        << std::setw(static_cast<int>(tait_width)) << "tait" << "  "
        << std::setw(static_cast<int>(menage_width)) << "menage" << "\n";
    for (const OutputRecord& r : records) {
        out << std::setw(static_cast<int>(n_width)) << r.n << "  "
            << std::setw(static_cast<int>(tait_width)) << r.tait << "  "
            << std::setw(static_cast<int>(menage_width)) << r.menage << "\n";
        if (r.terms) {
            for (const TermRecord& t : *r.terms) {
                out << "  r=" << t.r << ": " << (t.sign > 0 ? "+" : "-") << "1 * dominos "
                    << t.domino_count << " * tail " << t.tail_factorial << " = " << t.term << "\n";
            }
        }
    }
    return out.str();
}

} // namespace menage::output
