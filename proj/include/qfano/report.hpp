#pragma once

#include "qfano/family.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qfano {

enum class Status { Pass, Fail, Flag, Assumed, Skipped };
std::string status_str(Status s);

struct CheckRecord {
    std::string name;
    std::string computed;
    std::string expected;
    Status status = Status::Pass;
    std::string note;
    std::string mark;  // catalog mark this record covers, "" for derived checks
};

struct VerificationReport {
    int family = 0;
    std::vector<CheckRecord> checks;
    std::size_t count(Status s) const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::uint32_t prime = 7;
    int samples = 20;
    bool scans = true;       // quasismoothness and J_phi scans on sampled members
    bool identities = true;  // symbolic link and involution identities
    bool catalog = true;     // everything else
};

VerificationReport verify_family(const FamilyRecord& rec, const VerifyOptions& opt);

// Families run in parallel; output order follows the catalog.
std::vector<VerificationReport> verify_all(const Catalog& cat, const VerifyOptions& opt);

std::map<Status, std::size_t> summarize(const std::vector<VerificationReport>& reports);
bool any_fail(const std::vector<VerificationReport>& reports);

std::string format_text(const std::vector<VerificationReport>& reports);
std::string format_json(const std::vector<VerificationReport>& reports);

// Big table recomputed from the catalog and one general member per family.
std::string table_text(const Catalog& cat, std::uint64_t seed = 1);

}  // namespace qfano
