from weylift.cli import main

main()
