#include "motzkin/bfile.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace motzkin {

IntegerSequence BFile::to_sequence() const {
    if (entries.empty()) return {};
    std::vector<Integer> terms;
    terms.reserve(entries.size());
    for (const auto& [index, value] : entries) terms.push_back(value);
    return IntegerSequence(entries.front().first, std::move(terms));
}

BFile parse_bfile(std::istream& in) {
    BFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string index_text;
        std::string value_text;
        if (!(fields >> index_text) || index_text.front() == '#') continue;
        std::string extra;
        if (!(fields >> value_text) || (fields >> extra)) {
            throw BFileError(line_no, "expected 'index value', got '" + line + "'");
        }
        long index = 0;
        Integer value;
        try {
            const Integer parsed_index = parse_integer(index_text);
            if (!parsed_index.fits_slong_p()) throw std::invalid_argument("index out of range");
            index = parsed_index.get_si();
            value = parse_integer(value_text);
        } catch (const std::invalid_argument& e) {
            throw BFileError(line_no, e.what());
        }
        if (!file.entries.empty()) {
            const long expected = file.entries.back().first + 1;
            if (index < expected) {
                throw BFileError(line_no, "duplicate or decreasing index " + std::to_string(index));
            }
            if (index > expected) {
                throw BFileError(line_no, "gap: index " + std::to_string(expected) + " missing");
            }
        }
        file.entries.emplace_back(index, std::move(value));
    }
    return file;
}

BFile parse_bfile(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

BFile read_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(path.string() + ": cannot open b-file");
    }
    try {
        return parse_bfile(in);
    } catch (const BFileError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::string to_bfile_text(const IntegerSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += '\n';
        out += std::to_string(seq.offset() + static_cast<long>(i));
        out += ' ';
        out += seq.terms()[i].get_str();
    }
    return out;
}

ComparisonReport compare(SequenceId id, const BFile& reference, std::size_t n_terms) {
    const IntegerSequence ref = reference.to_sequence();
    const long offset = canonical_offset(id);
    if (ref.empty() || !ref.contains(offset)) {
        throw std::invalid_argument("reference does not contain the " + std::string(name(id)) +
                                    " offset " + std::to_string(offset));
    }
    ComparisonReport report{id, n_terms, 0, std::nullopt, ComparisonStatus::match};
    const std::size_t available = static_cast<std::size_t>(ref.last_index() - offset + 1);
    const std::size_t count = std::min(n_terms, available);
    const IntegerSequence generated = generate(id, count);
    for (std::size_t i = 0; i < count; ++i) {
        const long n = offset + static_cast<long>(i);
        ++report.compared;
        if (ref.at(n) != generated.at(n)) {
            report.first_mismatch = Mismatch{n, ref.at(n), generated.at(n)};
            report.status = ComparisonStatus::mismatch;
            return report;
        }
    }
    if (count < n_terms) report.status = ComparisonStatus::short_reference;
    return report;
}

std::string to_string(ComparisonStatus status) {
    switch (status) {
        case ComparisonStatus::match: return "MATCH";
        case ComparisonStatus::mismatch: return "MISMATCH";
        case ComparisonStatus::short_reference: return "SHORT_REFERENCE";
    }
    return "?";
}

std::string format_report(const ComparisonReport& report) {
    std::string out = std::string(name(report.id)) + ": " + to_string(report.status) + ", " +
                      std::to_string(report.compared) + " of " + std::to_string(report.requested) +
                      " terms compared";
    if (report.first_mismatch) {
        const auto& m = *report.first_mismatch;
        out += "; first mismatch at index " + std::to_string(m.index) + ": expected " + m.expected.get_str() +
               ", got " + m.actual.get_str();
    }
    return out;
}

}  // namespace motzkin
