#include "kernel_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace lpfz::cli {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& s, const std::string& key, const std::string& origin) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        raise(errc::parse_error, origin + ": value of '" + key + "' is not a number: " + s);
    }
    if (pos != s.size())
        raise(errc::parse_error, origin + ": trailing characters in '" + key + "': " + s);
    return v;
}

int parse_int(const std::string& s, const std::string& key, const std::string& origin) {
    const double v = parse_number(s, key, origin);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        raise(errc::parse_error, origin + ": '" + key + "' must be an integer: " + s);
    return i;
}

} // namespace

KernelSpec parse_kernel_text(const std::string& text, const std::string& origin) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            raise(errc::parse_error,
                  origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (kv.count(key))
            raise(errc::parse_error, origin + ": duplicate key '" + key + "'");
        kv[key] = val;
    }

    for (const auto& [key, _] : kv)
        if (key != "form" && key != "k" && key != "m" && key != "mu" && key != "betas" &&
            key != "a")
            raise(errc::parse_error, origin + ": unknown key '" + key + "'");

    if (!kv.count("form")) raise(errc::parse_error, origin + ": missing 'form'");
    const std::string form = kv["form"];

    KernelSpec spec;
    if (form == "cosh") {
        if (!kv.count("a")) raise(errc::parse_error, origin + ": cosh form requires 'a'");
        for (const char* bad : {"k", "m", "mu", "betas"})
            if (kv.count(bad))
                raise(errc::parse_error,
                      origin + ": key '" + std::string(bad) + "' is not valid for cosh form");
        spec = KernelSpec::cosh_example(parse_number(kv["a"], "a", origin));
    } else if (form == "parametric") {
        if (!kv.count("k") || !kv.count("m"))
            raise(errc::parse_error, origin + ": parametric form requires 'k' and 'm'");
        if (kv.count("a"))
            raise(errc::parse_error, origin + ": key 'a' is not valid for parametric form");
        std::vector<double> betas;
        if (kv.count("betas") && !trim(kv["betas"]).empty()) {
            std::istringstream bs(kv["betas"]);
            std::string item;
            while (std::getline(bs, item, ','))
                betas.push_back(parse_number(trim(item), "betas", origin));
        }
        spec = KernelSpec::parametric(parse_number(kv["k"], "k", origin),
                                      parse_int(kv["m"], "m", origin),
                                      kv.count("mu") ? parse_number(kv["mu"], "mu", origin) : 0.0,
                                      std::move(betas));
    } else {
        raise(errc::parse_error, origin + ": form must be 'parametric' or 'cosh', got '" +
                                     form + "'");
    }
    return validate(spec);
}

KernelSpec load_kernel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot read kernel file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_kernel_text(ss.str(), path);
}

} // namespace lpfz::cli
