from refplan.cli import main

main()
